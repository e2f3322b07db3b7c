from __future__ import annotations

import pytest

from app.config import Settings
from app.greens import build_zero_energy_solutions
from app.model.potentials import PotentialSpec


@pytest.fixture(scope="session")
def settings() -> Settings:
    return Settings()


@pytest.fixture(scope="session")
def quartic() -> PotentialSpec:
    return PotentialSpec.power_law(4.0)


@pytest.fixture(scope="session")
def shifted() -> PotentialSpec:
    return PotentialSpec.shifted_oscillator()


@pytest.fixture(scope="session")
def quartic_basis(quartic, settings):
    return build_zero_energy_solutions(quartic, settings)


@pytest.fixture(scope="session")
def shifted_basis(shifted, settings):
    return build_zero_energy_solutions(shifted, settings)


@pytest.fixture(scope="session")
def linear_basis(settings):
    return build_zero_energy_solutions(PotentialSpec.power_law(1.0), settings)
