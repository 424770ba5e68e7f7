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
import os
import subprocess

from densecode.tests import base


class BinTestCase(base.BaseTestCase):
    def test_densecode_construct_run(self):
        with open(os.devnull, 'w') as f:
            subp = subprocess.Popen(['densecode-construct', '--qubits', '3'],
                                    stdout=f, stderr=f)
        self.assertEqual(0, subp.wait())

    def test_densecode_select_constraint_exit_code(self):
        with open(os.devnull, 'w') as f:
            subp = subprocess.Popen(['densecode-select', '--state', 'w3'],
                                    stdout=f, stderr=f)
        self.assertEqual(3, subp.wait())
