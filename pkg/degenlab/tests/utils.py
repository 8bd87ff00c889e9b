from __future__ import unicode_literals

import io
import json
import shutil
import tempfile
import traceback
from contextlib import contextmanager, redirect_stdout
from pathlib import Path
from unittest import TestCase

import numpy as np

from degenlab.common.utils import json_string, unicode_string

__all__ = ["FixtureTest", "LabTest", "redirect_stdout"]


# pylint: disable=invalid-name
class LabTest(TestCase):
    """Test case with numerical tolerance helpers and file assertions"""

    def assertClose(self, expected, actual, rtol=1e-12, atol=0.0, msg=None):
        """Elementwise ``|actual - expected| <= atol + rtol |expected|``,
        complex values included"""
        expected = np.asarray(expected)
        actual = np.asarray(actual)
        error = np.abs(actual - expected)
        allowed = atol + rtol * np.abs(expected)
        if not np.all(error <= allowed):
            worst = int(np.argmax(error - allowed))
            self.fail(msg or "Values differ: expected %r, got %r (worst "
                             "error %r at flat index %d)"
                      % (expected, actual, float(error.ravel()[worst]),
                         worst))

    @contextmanager
    def fail_if_exception(self, msg):
        try:
            yield
        except Exception:  # pylint: disable=broad-except
            self.fail("%s\n%s" % (msg, traceback.format_exc()))

    def _read_text(self, path):
        path = Path(path)
        if not path.is_file():
            self.fail("Missing file: %s" % path)
        with io.open(str(path), encoding="utf8") as f:
            return f.read()

    def assertJsonContent(self, path, expected_dict):
        self.assertDictEqual(expected_dict, json.loads(self._read_text(path)))

    def assertFileContent(self, path, expected_content):
        self.assertEqual(expected_content, self._read_text(path))

    @staticmethod
    def writeJsonContent(path, obj):
        LabTest.writeFileContent(path, json_string(obj))

    @staticmethod
    def writeFileContent(path, content):
        with io.open(str(path), mode="w", encoding="utf8") as f:
            f.write(unicode_string(content))


class FixtureTest(LabTest):
    """Gives each test a fresh temporary ``fixture_dir``"""

    def setUp(self):
        super(FixtureTest, self).setUp()
        self.fixture_dir = Path(tempfile.mkdtemp(prefix="degenlab_"))

    def tearDown(self):
        shutil.rmtree(str(self.fixture_dir), ignore_errors=True)
        super(FixtureTest, self).tearDown()
