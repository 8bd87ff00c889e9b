# inspired from:
# https://python-packaging-user-guide.readthedocs.io/guides/single-sourcing-package-version/
# https://github.com/pypa/warehouse/blob/master/warehouse/__about__.py

# pylint:disable=line-too-long

__title__ = "degenlab"
__summary__ = "Numerical laboratory for degenerating deformations of " \
              "infinite-type Riemann surfaces"
__github_url__ = "https://github.com/degenlab/degenlab"
__doc_url__ = "https://degenlab.readthedocs.io"
__tracker_url__ = "https://github.com/degenlab/degenlab/issues"
__author__ = "degenlab contributors"
__email__ = "degenlab@users.noreply.github.com"
__license__ = "Apache License, Version 2.0"

__version__ = "0.3.0"
__report_schema_version__ = "1.1"

# pylint:enable=line-too-long
