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
from oslo_config import cfg

from densecode import codec
from densecode import selector


ORDERING_CANONICAL = "canonical"
ORDERING_PAPER = "paper"
# Alias of "paper".
ORDERING_PUBLISHED = "published"
ORDERINGS = (ORDERING_CANONICAL, ORDERING_PAPER, ORDERING_PUBLISHED)


_cli_options = (
    cfg.BoolOpt(
        'debug',
        short='d',
        default=False,
        help='If set to true, the logging level will be set to DEBUG.'),
    cfg.BoolOpt(
        'verbose',
        short='v',
        default=True,
        help='If set to true, the logging level will be set to INFO.'),
    cfg.StrOpt(
        "log-dir",
        help="Base directory for log files. "
        "If not set, logging will go to stderr."),
    cfg.StrOpt(
        'log-file',
        metavar='PATH',
        help='(Optional) Name of log file to send logging output to. '
        'If no default is set, logging will go to stderr.'),
)


SELECTOR_OPTS = (
    cfg.StrOpt('filter_mode',
               default=selector.FILTER_SEMANTIC,
               choices=list(selector.FILTER_MODES),
               help="Condition 1 pre-filter applied before the "
               "orthogonality check: none, literal (no even-Z diagonal "
               "element) or semantic (no element acting as +/- identity "
               "on the state)."),
)


OUTPUT_OPTS = (
    cfg.StrOpt('format',
               default=codec.FORMAT_MARKDOWN,
               choices=list(codec.FORMATS),
               help="Output format of listings and tables."),
    cfg.StrOpt('ordering',
               default=ORDERING_CANONICAL,
               choices=list(ORDERINGS),
               help="Row order of dense-coding tables: canonical sorts "
               "operators by symplectic vector, paper (alias published) uses "
               "the row order from the label file when one matches."),
)


def list_opts():
    return [
        ("DEFAULT", _cli_options + (
            cfg.IntOpt(
                'parallel_operations',
                min=1,
                help='Number of threads to use to parallelize '
                'some operations. '
                'Default is set to the number of CPU available.'),
            cfg.StrOpt(
                'labels_file',
                help='JSON file of subgroup display names and table '
                'orderings. The DENSECODE_LABELS environment variable '
                'overrides it; the file shipped with densecode is used '
                'when neither is set.'),
            cfg.BoolOpt(
                'use-syslog',
                default=False,
                help='Use syslog for logging.'),
            cfg.StrOpt(
                'syslog-log-facility',
                default='user',
                help='Syslog facility to receive log lines.')
        )),
        ("selector", SELECTOR_OPTS),
        ("output", OUTPUT_OPTS),
    ]
