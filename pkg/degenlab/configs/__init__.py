from degenlab.configs.config import Config, SuiteConfig
from degenlab.configs.run_config import (
    RunConfig, default_output_dir, load_config_file)
from degenlab.configs.suites import (
    BoundsSuiteConfig, CylinderSuiteConfig, DavidSuiteConfig,
    PuddingSuiteConfig, SchwarzianSuiteConfig, SolverSuiteConfig,
    StretchSuiteConfig)
