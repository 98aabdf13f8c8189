"""
Health Check 엔드포인트

서비스 상태 확인
"""
from datetime import datetime, timezone

from fastapi import APIRouter
from pydantic import BaseModel

from src.models.verdict import Budget

router = APIRouter()


class HealthResponse(BaseModel):
    """헬스 체크 응답"""

    status: str
    timestamp: str
    version: str
    budget: Budget


@router.get("/health", response_model=HealthResponse)
async def health_check():
    """
    헬스 체크

    서비스 상태와 현재 기본 탐색 예산을 확인합니다.

    Returns:
        HealthResponse: 서비스 상태 정보
    """
    return HealthResponse(
        status="healthy",
        timestamp=datetime.now(timezone.utc).isoformat(),
        version="0.1.0",
        budget=Budget.from_settings(),
    )


@router.get("/")
async def root():
    """
    루트 엔드포인트

    Returns:
        dict: 서비스 정보
    """
    return {
        "service": "Dimensional Type Service",
        "status": "running",
        "docs": "/docs",
    }
