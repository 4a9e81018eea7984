from .main import main, run_lagfib
from .runtime import Inifile, LagfibConfigurationError, Pool, logs
from .version import __version__
from .errors import LagfibError
from .graded_ring import RingSpec, GradedElement, Monomial, make_ring
from .char_classes import (CharacteristicSeries, ChernNumbers, ahat_series, sqrt_ahat_series,
                           characteristic_number)
from .fibration_formulas import (PolarizationType, DegenerationModel, FujikiData, DegreeResult,
                                 rational_nth_root, deg_delta_principal, deg_delta_polarized,
                                 deg_delta_from_b_theta, master_equation_solve, degeneration_models)
from .intersection_products import SurfaceData, pencil_degree
from .fourfold_enumerator import BettiPair, FourfoldInvariants, CensusRow, census, bounds_summary
from .output import PlainOutput, CsvOutput, JsonOutput, output_from_options
