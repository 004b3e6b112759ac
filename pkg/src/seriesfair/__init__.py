"""Exact win probabilities for best-of-N playoff series with home-field advantage."""
from .core import (
    BivariatePolynomial,
    FormatError,
    Rational,
    SeriesFormat,
    UnivariatePolynomial,
    Venue,
)
from .enumeration import (
    Scenario,
    Side,
    enumerate_victory_scenarios,
    scenario_probability,
    series_win_polynomial,
)
from .records import R_PAPER, TeamRecord, average_road_multiplier, load_records, road_multiplier
from .analysis import (
    ComparisonReport,
    crossover_point,
    difference_function,
    extreme_value_analysis,
    fairness_verdict,
    isolate_roots,
)
from .morale import (
    Mode,
    MoraleModel,
    SeriesState,
    game_win_probability,
    series_win_probability_dp,
    simulate_series,
)

__version__ = "0.1.0"
