"""
Dimensional Type Service 메인 애플리케이션

FastAPI 기반 산재 공간 차원 타입 계산 서비스
"""
import structlog
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from src.config.settings import settings
from src.api.rest import health, ordinals, spaces, stable
from src.core.errors import DimTypeError, ParseError, UnknownVerdictError
from src.utils.logger import setup_logging

# 로깅 설정
setup_logging(settings.log_level)
logger = structlog.get_logger()


def create_app() -> FastAPI:
    """FastAPI 애플리케이션 생성"""

    app = FastAPI(
        title="Dimensional Type Service",
        description="가산 산재 공간의 도함수, 정준형, 임베딩 판정, 안정 타입 열거",
        version="0.1.0",
        docs_url="/docs" if settings.debug else None,
        redoc_url="/redoc" if settings.debug else None,
    )

    # 라우터 등록
    app.include_router(health.router, tags=["Health"])
    app.include_router(spaces.router, prefix="/api/v1", tags=["Spaces"])
    app.include_router(ordinals.router, prefix="/api/v1", tags=["Ordinals"])
    app.include_router(stable.router, prefix="/api/v1", tags=["Stable"])

    # Startup 이벤트
    @app.on_event("startup")
    async def startup_event():
        logger.info(
            "application_startup",
            environment=settings.environment,
            debug=settings.debug,
            embed_slope=settings.embed_slope,
            embed_width=settings.embed_width,
        )

    # Shutdown 이벤트
    @app.on_event("shutdown")
    async def shutdown_event():
        logger.info("application_shutdown")

    # 도메인 예외 핸들러
    @app.exception_handler(DimTypeError)
    async def domain_exception_handler(request: Request, exc: DimTypeError):
        # 파싱 오류는 400, 사전 조건 위반과 unknown 은 422
        status_code = 400 if isinstance(exc, ParseError) else 422
        content = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError):
            content["position"] = exc.position
        if isinstance(exc, UnknownVerdictError) and exc.pair:
            content["pair"] = list(exc.pair)
        logger.info("domain_error", path=request.url.path, error=str(exc), status=status_code)
        return JSONResponse(status_code=status_code, content=content)

    # 전역 예외 핸들러
    @app.exception_handler(Exception)
    async def global_exception_handler(request, exc):
        logger.error(
            "unhandled_exception",
            path=request.url.path,
            error=str(exc),
            exc_info=True,
        )
        return JSONResponse(
            status_code=500,
            content={
                "error": "Internal Server Error",
                "message": "An unexpected error occurred"
                if settings.is_production
                else str(exc),
            },
        )

    return app


# 애플리케이션 인스턴스
app = create_app()


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "src.main:app",
        host=settings.host,
        port=settings.port,
        reload=settings.debug,
        log_level=settings.log_level.lower(),
    )
