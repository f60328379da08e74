from autonorm.services.normality_service import NormalityService

__all__ = ["NormalityService"]
