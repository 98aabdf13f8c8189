"""
구조화된 로깅 설정

structlog을 사용한 JSON 로깅. 출력은 표준 에러로 보내
CLI의 표준 출력이 실행마다 바이트 단위로 동일하게 유지됩니다.
"""
import logging
import sys
from typing import Optional

import structlog


def setup_logging(log_level: str = "WARNING") -> None:
    """
    로깅 설정

    Args:
        log_level: 로그 레벨 (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    """
    level = getattr(logging, log_level.upper(), logging.WARNING)

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            structlog.processors.JSONRenderer(),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    # 표준 로깅은 stderr로
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=level,
        force=True,
    )


def get_logger(name: Optional[str] = None) -> structlog.stdlib.BoundLogger:
    """
    로거 인스턴스 반환

    Args:
        name: 로거 이름 (보통 __name__ 사용)

    Returns:
        structlog.stdlib.BoundLogger: 로거 인스턴스

    Example:
        ```python
        logger = get_logger(__name__)
        logger.info("embed_decided", answer="yes")
        ```
    """
    return structlog.get_logger(name)
