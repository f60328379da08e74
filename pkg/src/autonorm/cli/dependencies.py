from __future__ import annotations

from functools import lru_cache

from autonorm.services import NormalityService


@lru_cache(maxsize=1)
def get_service() -> NormalityService:
    return NormalityService()


def clear_dependency_caches() -> None:
    get_service.cache_clear()
