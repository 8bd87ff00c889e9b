from degenlab.__about__ import __report_schema_version__, __version__
from degenlab.configs import RunConfig
from degenlab.runner import run
