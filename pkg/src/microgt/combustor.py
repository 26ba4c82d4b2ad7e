"""Reduced-order model of the annular micro combustor.

The chamber is treated as a well-stirred reactor wrapped by a recuperative
recirculation channel.  One lumped wall node couples three heat paths:

  * jet-mixing contact between burned gas and the wall,
    Q_int = kappa * mdot * cp * (T_exit - T_wall);
  * recuperative preheat of the incoming mixture in a flat channel,
    effectiveness from NTU with a constant laminar Nusselt number;
  * exterior loss to ambient through a lumped conductance G,
    Q_loss = G * (T_wall - T_ambient).

Blow-out is classified by a Damkohler number: residence time of the chamber
at the flame temperature over an Arrhenius chemical time referenced to the
preheated-mixture temperature.  The chemical-time constants and the wall
conductance are calibration parameters; the shipped defaults were frozen
from the grid-search procedure in tests/calibration_fixture.py.

No dissociation, no spatial resolution, ideal-gas mixtures throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import gas

# Transport surrogate: power-law viscosity with constant Prandtl number.
PRANDTL = 0.70
VISCOSITY_REF = 1.85e-5  # Pa s at 300 K
VISCOSITY_EXPONENT = 0.7
NU_CHANNEL = 7.54  # laminar parallel-plate value, used for the recuperator
INTERIOR_EFFECTIVENESS = 0.90  # fraction of capacity flux equilibrating with the wall
AMBIENT_TEMPERATURE = 300.0  # K, heat-loss sink

# Frozen chemical-time calibration (see tests/calibration_fixture.py).
CHEM_PREFACTOR = 4.8290e-10  # s
CHEM_ACTIVATION_ENERGY = 45.0e3  # J/mol
CHEM_PHI_EXPONENT = 1.0
CHEM_PRESSURE_EXPONENT = 1.0
DA_CRITICAL = 1.0

# Scan grid used to locate the lean-blowout mass flow, kg/s.
BLOWOUT_SCAN_FLOWS = tuple(0.01e-3 + 0.0025e-3 * i for i in range(77))


class ConvergenceError(RuntimeError):
    """Thermal or flame-temperature solve failed to converge."""


@dataclass(frozen=True)
class CombustorGeometry:
    """Annular chamber plus hairpin recirculation channel dimensions.

    The annulus radii, channel dimensions and the lumped wall conductance are
    not reported for the hardware; the defaults are toolkit assumptions sized
    to fit the 21.5 mm die and are overridable in the scenario config.
    """

    chamber_height: float = 1.2e-3  # m
    annulus_outer_radius: float = 8.0e-3  # m
    annulus_inner_radius: float = 5.0e-3  # m
    recirculation_channel_length: float = 0.05  # m, unfolded hairpin length
    recirculation_hydraulic_diameter: float = 0.8e-3  # m
    recirculation_channel_width: float = 15.0e-3  # m, flat-channel span
    wall_thermal_conductance: float = 0.56  # W/K, lumped exterior loss
    die_footprint: float = 0.0215  # m

    def __post_init__(self):
        if not self.annulus_outer_radius > self.annulus_inner_radius > 0.0:
            raise ValueError("annulus radii must satisfy outer > inner > 0")
        if self.chamber_height <= 0.0:
            raise ValueError("chamber_height must be positive")
        if self.wall_thermal_conductance < 0.0:
            raise ValueError("wall_thermal_conductance must be non-negative")
        if self.recirculation_channel_length < 0.0:
            raise ValueError("recirculation_channel_length must be non-negative")
        if self.recirculation_hydraulic_diameter <= 0.0 or self.recirculation_channel_width <= 0.0:
            raise ValueError("recirculation channel dimensions must be positive")

    @property
    def chamber_volume(self) -> float:
        """Annular chamber volume, m^3."""
        return math.pi * (self.annulus_outer_radius ** 2
                          - self.annulus_inner_radius ** 2) * self.chamber_height


@dataclass(frozen=True)
class CombustorOperatingPoint:
    air_mass_flow: float  # kg/s
    equivalence_ratio: float
    inlet_temperature: float = 300.0  # K
    inlet_pressure: float = 101325.0  # Pa

    def __post_init__(self):
        if self.air_mass_flow <= 0.0:
            raise ValueError("air_mass_flow must be positive")
        if not 0.0 <= self.equivalence_ratio <= 1.0:
            raise ValueError("equivalence_ratio must lie in [0, 1]")
        if self.inlet_temperature <= 0.0 or self.inlet_pressure <= 0.0:
            raise ValueError("inlet temperature and pressure must be positive")

    @property
    def fuel_mass_flow(self) -> float:
        return self.air_mass_flow * gas.fuel_air_mass_ratio(self.equivalence_ratio)

    @property
    def total_mass_flow(self) -> float:
        return self.air_mass_flow + self.fuel_mass_flow


@dataclass(frozen=True)
class ChemicalTimeModel:
    """Arrhenius chemical-time correlation constants."""

    prefactor: float = CHEM_PREFACTOR  # s
    activation_energy: float = CHEM_ACTIVATION_ENERGY  # J/mol
    phi_exponent: float = CHEM_PHI_EXPONENT
    pressure_exponent: float = CHEM_PRESSURE_EXPONENT
    da_critical: float = DA_CRITICAL

    def __post_init__(self):
        if self.prefactor <= 0.0:
            raise ValueError("prefactor must be positive")
        if self.activation_energy <= 0.0:
            raise ValueError("activation_energy must be positive")
        if self.phi_exponent <= 0.0:
            raise ValueError("phi_exponent must be positive")
        if self.da_critical <= 0.0:
            raise ValueError("da_critical must be positive")


DEFAULT_CHEMISTRY = ChemicalTimeModel()


@dataclass(frozen=True)
class StabilityResult:
    residence_time: float  # s
    chemical_time: float  # s
    damkohler: float
    stable: bool
    exit_temperature: float  # K
    wall_temperature: float  # K


@dataclass(frozen=True)
class ExitTemperatureResult:
    exit_temperature: float  # K
    wall_temperature: float  # K
    reacting: bool  # False -> non-reacting mixed temperature reported


def viscosity(t: float) -> float:
    """Power-law gas viscosity, Pa s."""
    return VISCOSITY_REF * (t / 300.0) ** VISCOSITY_EXPONENT


def stoichiometric_fuel_air_ratio() -> float:
    """Stoichiometric H2/air mass ratio for the fixed dry-air composition."""
    return gas.fuel_air_mass_ratio(1.0)


def equivalence_ratio(fuel_mass_flow: float, air_mass_flow: float) -> float:
    """Actual fuel/air mass ratio over the stoichiometric one."""
    if fuel_mass_flow < 0.0 or air_mass_flow <= 0.0:
        raise ValueError("flows must satisfy fuel >= 0 and air > 0")
    return (fuel_mass_flow / air_mass_flow) / stoichiometric_fuel_air_ratio()


def adiabatic_flame_temperature(phi: float, inlet_temperature: float,
                                inlet_pressure: float = 101325.0) -> float:
    """Complete-combustion flame temperature of a premixed H2-air stream.

    Solves h(products, T) = h(mixture, T_in) on total enthalpies by bisection.
    Without dissociation the result runs above equilibrium values near
    stoichiometric (by roughly 100 K at phi = 1).
    """
    if not 0.0 <= phi <= 1.0:
        if phi > 1.0:
            raise gas.RichMixtureError(f"phi = {phi} is rich; lean model only")
        raise ValueError(f"phi must be non-negative, got {phi}")
    if phi == 0.0:
        return inlet_temperature
    mixture = gas.unburned_mixture(phi)
    products = gas.burned_composition(phi)
    target = gas.enthalpy_mass(mixture, inlet_temperature)
    t_lo, t_hi = inlet_temperature, 3400.0
    if gas.enthalpy_mass(products, t_hi) - target < 0.0:
        raise ConvergenceError(
            f"flame temperature above {t_hi} K (residual "
            f"{gas.enthalpy_mass(products, t_hi) - target:.3e} J/kg)"
        )
    for _ in range(200):
        t_mid = 0.5 * (t_lo + t_hi)
        if gas.enthalpy_mass(products, t_mid) - target > 0.0:
            t_hi = t_mid
        else:
            t_lo = t_mid
        if t_hi - t_lo < 1e-10 * t_mid:
            break
    return 0.5 * (t_lo + t_hi)


def _recuperator_ntu(geometry: CombustorGeometry, mixture, total_mass_flow: float,
                     film_temperature: float) -> float:
    # Flat channel of width W and gap D_h/2: NTU = Nu k W L / (b mdot cp).
    cp_mix = gas.cp_mass(mixture, film_temperature)
    k_film = cp_mix * viscosity(film_temperature) / PRANDTL
    gap = 0.5 * geometry.recirculation_hydraulic_diameter
    area_term = geometry.recirculation_channel_width * geometry.recirculation_channel_length
    return NU_CHANNEL * k_film * area_term / (gap * total_mass_flow * cp_mix)


def recuperator_preheat(geometry: CombustorGeometry, op: CombustorOperatingPoint,
                        wall_temperature: float):
    """Preheated mixture temperature and the heat drawn from the wall.

    Effectiveness model for one stream against an isothermal wall:
    eps = 1 - exp(-NTU).  Returns (T_preheat K, heat W).
    """
    if wall_temperature < op.inlet_temperature:
        raise ValueError("wall temperature must be at or above the inlet temperature")
    mixture = gas.unburned_mixture(op.equivalence_ratio)
    mdot = op.total_mass_flow
    t_film = 0.5 * (wall_temperature + op.inlet_temperature)
    ntu = _recuperator_ntu(geometry, mixture, mdot, t_film)
    eps = 1.0 - math.exp(-ntu)
    t_pre = op.inlet_temperature + eps * (wall_temperature - op.inlet_temperature)
    heat = mdot * gas.cp_mass(mixture, t_film) * (t_pre - op.inlet_temperature)
    return t_pre, heat


def residence_time(geometry: CombustorGeometry, op: CombustorOperatingPoint,
                   flame_temperature: float) -> float:
    """Chamber volume over the volumetric throughput at flame conditions."""
    if flame_temperature <= 0.0:
        raise ValueError("flame_temperature must be positive")
    products = gas.burned_composition(op.equivalence_ratio)
    rho = (op.inlet_pressure * gas.mixture_molar_mass(products)
           / (gas.R_UNIVERSAL * flame_temperature))
    return geometry.chamber_volume * rho / op.total_mass_flow


def chemical_time(phi: float, pressure: float, preheat_temperature: float,
                  chemistry: ChemicalTimeModel = DEFAULT_CHEMISTRY) -> float:
    """Arrhenius chemical time A exp(Ea/RT) / (phi^n (p/p0)^m), seconds.

    phi = 0 returns math.inf: a fuel-free stream can never hold a flame.
    """
    if phi == 0.0:
        return math.inf
    if phi < 0.0:
        raise ValueError(f"phi must be non-negative, got {phi}")
    arrhenius = math.exp(chemistry.activation_energy
                         / (gas.R_UNIVERSAL * preheat_temperature))
    scale = phi ** chemistry.phi_exponent * (pressure / 101325.0) ** chemistry.pressure_exponent
    return chemistry.prefactor * arrhenius / scale


def _solve_thermal(geometry: CombustorGeometry, op: CombustorOperatingPoint,
                   ambient_temperature: float = AMBIENT_TEMPERATURE):
    """Coupled exit/wall temperatures assuming a burning chamber.

    Gas balance:   mdot [h_tot(products, T_exit) - h_tot(mixture, T_in)]
                   = -G (T_wall - T_amb)
    Wall balance:  kappa mdot cp_prod (T_exit - T_wall)
                   = G (T_wall - T_amb) + mdot cp_mix eps (T_wall - T_in)

    Returns (T_exit, T_wall, T_preheat).  The recuperator term is internal
    heat recirculation and cancels from the gas balance.
    """
    phi = op.equivalence_ratio
    mdot = op.total_mass_flow
    mixture = gas.unburned_mixture(phi)
    products = gas.burned_composition(phi)
    h_in = gas.enthalpy_mass(mixture, op.inlet_temperature)
    g_loss = geometry.wall_thermal_conductance
    t_in = op.inlet_temperature

    def exit_for_wall(t_w):
        target = h_in - g_loss * (t_w - ambient_temperature) / mdot
        t_lo, t_hi = 250.0, 3400.0
        if gas.enthalpy_mass(products, t_hi) - target < 0.0:
            return t_hi
        if gas.enthalpy_mass(products, t_lo) - target > 0.0:
            return t_lo
        for _ in range(120):
            t_mid = 0.5 * (t_lo + t_hi)
            if gas.enthalpy_mass(products, t_mid) - target > 0.0:
                t_hi = t_mid
            else:
                t_lo = t_mid
        return 0.5 * (t_lo + t_hi)

    def wall_update(t_w):
        t_e = exit_for_wall(t_w)
        t_film = 0.5 * (t_w + t_in)
        ntu = _recuperator_ntu(geometry, mixture, mdot, t_film)
        eps = 1.0 - math.exp(-ntu)
        g_int = INTERIOR_EFFECTIVENESS * mdot * gas.cp_mass(products, t_e)
        k_rec = mdot * gas.cp_mass(mixture, t_film) * eps
        return ((g_int * t_e + g_loss * ambient_temperature + k_rec * t_in)
                / (g_int + g_loss + k_rec)), t_e, eps

    t_w = max(t_in, ambient_temperature)
    converged = False
    for _ in range(400):
        t_w_new, t_e, eps = wall_update(t_w)
        if abs(t_w_new - t_w) < 1e-9 * max(t_w, 1.0):
            t_w = t_w_new
            converged = True
            break
        t_w = 0.5 * (t_w + t_w_new)
    if not converged:
        raise ConvergenceError(
            f"wall balance did not converge (last wall update {t_w_new - t_w:.3e} K)"
        )
    _, t_e, eps = wall_update(t_w)
    t_pre = t_in + eps * (t_w - t_in)
    return t_e, t_w, t_pre


def exit_temperature(geometry: CombustorGeometry, op: CombustorOperatingPoint,
                     chemistry: ChemicalTimeModel = DEFAULT_CHEMISTRY,
                     ambient_temperature: float = AMBIENT_TEMPERATURE) -> ExitTemperatureResult:
    """Loss-corrected exit and wall temperatures.

    For a stable point the exit temperature is the adiabatic value minus the
    exterior wall loss G (T_wall - T_amb).  An unstable point reports the
    non-reacting mixed temperature with reacting=False so that sweeps stay
    total.
    """
    result = stability(geometry, op, chemistry, ambient_temperature)
    return ExitTemperatureResult(result.exit_temperature, result.wall_temperature,
                                 reacting=result.stable)


def stability(geometry: CombustorGeometry, op: CombustorOperatingPoint,
              chemistry: ChemicalTimeModel = DEFAULT_CHEMISTRY,
              ambient_temperature: float = AMBIENT_TEMPERATURE) -> StabilityResult:
    """Blow-out classification of one operating point.

    Evaluates the burning-chamber thermal state, the recuperator preheat, the
    flame temperature, and the residence and chemical times; the point is
    stable when Da = residence/chemical >= da_critical.  Unstable points
    report the non-reacting mixed temperature (inlet mixture temperature)
    and an ambient wall.
    """
    phi = op.equivalence_ratio
    if phi == 0.0:
        return StabilityResult(
            residence_time=residence_time(geometry, op, op.inlet_temperature),
            chemical_time=math.inf, damkohler=0.0, stable=False,
            exit_temperature=op.inlet_temperature, wall_temperature=ambient_temperature,
        )
    t_exit, t_wall, t_pre = _solve_thermal(geometry, op, ambient_temperature)
    t_flame = adiabatic_flame_temperature(phi, t_pre, op.inlet_pressure)
    tau_res = residence_time(geometry, op, t_flame)
    tau_chem = chemical_time(phi, op.inlet_pressure, t_pre, chemistry)
    da = tau_res / tau_chem
    stable = da >= chemistry.da_critical
    if stable:
        return StabilityResult(tau_res, tau_chem, da, True, t_exit, t_wall)
    return StabilityResult(tau_res, tau_chem, da, False,
                           op.inlet_temperature, ambient_temperature)


def blowout_mass_flow(geometry: CombustorGeometry, phi: float,
                      chemistry: ChemicalTimeModel = DEFAULT_CHEMISTRY,
                      inlet_temperature: float = 300.0,
                      inlet_pressure: float = 101325.0,
                      scan_flows=BLOWOUT_SCAN_FLOWS):
    """Smallest stable air mass flow on the scan grid, kg/s (None if all blow out)."""
    for mdot in scan_flows:
        op = CombustorOperatingPoint(mdot, phi, inlet_temperature, inlet_pressure)
        if stability(geometry, op, chemistry).stable:
            return mdot
    return None
