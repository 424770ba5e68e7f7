# -*- encoding: utf-8 -*-
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.
"""Apply testscenarios under pytest.

The test modules use ``load_tests = testscenarios.load_tests_apply_scenarios``,
which stestr honours but pytest ignores. Expand each scenario into its own
test case class so pytest runs the same set of tests.
"""
import inspect
import unittest

from _pytest import unittest as pytest_unittest


def pytest_pycollect_makeitem(collector, name, obj):
    if not (inspect.isclass(obj) and issubclass(obj, unittest.TestCase)):
        return None
    scenarios = getattr(obj, "scenarios", None)
    if not scenarios:
        return None
    items = []
    for scenario_name, params in scenarios:
        attrs = dict(params)
        attrs["scenarios"] = None
        attrs["__module__"] = obj.__module__
        cls_name = "%s[%s]" % (name, scenario_name)
        cls = type(cls_name, (obj,), attrs)
        # pytest looks the class up on the module by name.
        setattr(collector.obj, cls_name, cls)
        items.append(pytest_unittest.UnitTestCase.from_parent(
            collector, name=cls_name, obj=cls))
    return items
