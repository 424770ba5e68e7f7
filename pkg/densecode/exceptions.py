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


class DenseCodeError(Exception):
    pass


class InvariantViolation(DenseCodeError):
    """Raised when a constructed object breaks one of its postconditions."""

    def __init__(self, what, detail):
        super(InvariantViolation, self).__init__(
            "Invariant violated for %s: %s" % (what, detail))
        self.what = what
        self.detail = detail
