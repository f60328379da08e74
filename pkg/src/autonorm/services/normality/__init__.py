from autonorm.services.normality.diagnostic_runs import DiagnosticsRunMixin
from autonorm.services.normality.transform_runs import TransformRunMixin

__all__ = ["DiagnosticsRunMixin", "TransformRunMixin"]
