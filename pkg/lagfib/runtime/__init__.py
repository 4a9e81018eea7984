from .config import LagfibConfigurationError, Inifile
from .process_pool import Pool
from . import logs
