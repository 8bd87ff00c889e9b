from __future__ import unicode_literals

from math import pi, sqrt

# package
PACKAGE_NAME = "degenlab"
OUTPUT_DIR_ENV = "DEGENLAB_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "degenlab_reports"
DEFAULT_SEED = 0
ALL_SUITES = "all"

# geometry
X_PERIOD = 2 * pi
DEFAULT_BAND_FRACTION = 0.5
STAGE_GROWTH = 1.5
INJECTIVITY_HEIGHT_THRESHOLD = 2 * sqrt(2) * pi ** 2
RADIUS_RATIO = 2 * sqrt(2) / 3
GEODESIC_DECAY_RATIO = 2.0 / 3.0

# report
SCHEMA_VERSION = "schema_version"
SUITE = "suite"
CONFIG = "config"
CHECKS = "checks"
ARTIFACTS = "artifacts"
PASSED = "passed"
ELAPSED_SECONDS = "elapsed_seconds"
SEED = "seed"
NAME = "name"
VALUE = "value"
EXPECTED = "expected"
SUITES = "suites"

# serialization
KIND = "kind"
BANDS = "bands"
REGIONS = "regions"
GRID = "grid"
LOWER = "lower"
UPPER = "upper"
LABEL = "label"
LOG_AREA = "log_area"
DILATATION = "dilatation"
BACKGROUND_AREA = "background_area"
HALFHEIGHT = "halfheight"
BREAKPOINTS = "breakpoints"
SLOPES = "slopes"
OFFSETS = "offsets"
SOURCE_HALFHEIGHT = "source_halfheight"
TARGET_HALFHEIGHT = "target_halfheight"
REAL = "re"
IMAG = "im"
