"""
애플리케이션 설정

환경변수(.env 포함)를 통해 탐색 예산, 코퍼스 한도, 로깅 설정을 관리합니다.
"""
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """애플리케이션 설정"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Environment
    environment: str = Field(default="dev", description="실행 환경")
    debug: bool = Field(default=False, description="디버그 모드")

    # Server (REST)
    host: str = Field(default="0.0.0.0", description="서버 호스트")
    port: int = Field(default=8000, description="서버 포트")

    # Embedding search budget
    embed_slope: int = Field(default=8, ge=0, description="링 할당 기울기 상한")
    embed_width: int = Field(default=8, ge=1, description="링 할당 구간 폭 상한")
    embed_depth: Optional[int] = Field(
        default=None,
        ge=0,
        description="재귀 깊이 상한 (None이면 대상 표현식의 rank)",
    )
    embed_node_limit: int = Field(
        default=20000,
        ge=1,
        description="합(sum) 분배 탐색의 노드 상한",
    )
    embed_memo_size: int = Field(
        default=200000,
        ge=1,
        description="엔진 하나의 메모 항목 상한 (LRU)",
    )

    # Term algebra
    term_cache_size: int = Field(default=65536, ge=1, description="항 함수(lru_cache) 캐시 크기")
    max_nesting: int = Field(default=64, ge=1, description="입력 표현식의 최대 중첩 깊이")

    # Corpus / families
    corpus_size_cap: int = Field(default=6, ge=1, description="코퍼스 크기 상한")
    bit_prefix_cap: int = Field(default=8, ge=1, description="X_f 비트 접두사 길이 상한")
    stable_max_level: int = Field(default=3, ge=0, description="안정 타입 열거 최대 레벨")

    # Suites
    suite_seed: int = Field(default=0, description="무작위 스위트 시드")
    suite_samples: int = Field(default=10000, ge=1, description="스위트 샘플 수")

    # Output
    output_format: str = Field(default="text", description="기본 출력 형식 (text|json)")

    # Logging
    log_level: str = Field(default="WARNING", description="로그 레벨")

    @property
    def is_production(self) -> bool:
        """프로덕션 환경 여부"""
        return self.environment == "prod"


# 싱글톤 인스턴스
settings = Settings()


def get_settings() -> Settings:
    """
    설정 인스턴스 반환

    FastAPI의 Depends와 함께 사용하여 의존성 주입 가능
    테스트 시 설정을 오버라이드할 수 있음

    Returns:
        Settings: 애플리케이션 설정
    """
    return settings
