"""Default registries shipped with the engine.

Both come from the empirical study behind the model: the CLIC constants
were read off per-industry effort saturation curves over 15 deployments
each, and the provider profile reflects the service organization those
deployments were observed under. Teams should recalibrate and override
both as their own record base grows.
"""

from __future__ import annotations

from .model import IndustryRegistry, ProviderProfile

DEFAULT_DELTA_W = {
    "finance": 6.0,
    "healthcare": 8.0,
    "retail": 10.0,
    "airline": 15.0,
    "manufacturing": 10.0,
    "telecom": 6.0,
}

DEFAULT_K = 150.0

DEFAULT_X_BY_INDUSTRY = {
    "retail": 0.8,
    "finance": 0.6,
    "healthcare": 0.8,
    "airline": 0.7,
}


def default_industry_registry() -> IndustryRegistry:
    return IndustryRegistry(dict(DEFAULT_DELTA_W))


def default_provider_profile() -> ProviderProfile:
    # default_x = 1.0: no asset leverage assumed for industries without a track record
    return ProviderProfile(k=DEFAULT_K, x_by_industry=dict(DEFAULT_X_BY_INDUSTRY), default_x=1.0)
