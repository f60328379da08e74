from autonorm.services.normality import DiagnosticsRunMixin, TransformRunMixin


class NormalityService(TransformRunMixin, DiagnosticsRunMixin):
    """Stateless facade: every run value arrives through `RunConfig`."""
