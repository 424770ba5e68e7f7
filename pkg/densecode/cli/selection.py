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
import daiquiri
from oslo_config import cfg

from densecode.cli import common
from densecode import codec
from densecode import selector
from densecode import service
from densecode import state


LOG = daiquiri.getLogger(__name__)

FILTER_OPT = cfg.StrOpt(
    "filter", choices=list(selector.FILTER_MODES),
    help="Condition 1 pre-filter, defaults to [selector]/filter_mode.")


def _render(conf, report):
    label_set = service.get_labels(conf)
    fmt = common.output_format(conf)
    if fmt == codec.FORMAT_JSON:
        return common.dump_json(report.jsonify(label_set))
    if fmt == codec.FORMAT_CSV:
        return codec.to_csv(report.csv_rows(label_set))
    return report.to_markdown(label_set)


def _positions(conf, s):
    if conf.positions:
        return state.PositionSet.parse(conf.positions, s.t)


def _select(conf):
    name, s = common.load_state(conf.state)
    report = selector.select(s, conf.filter or conf.selector.filter_mode,
                             positions=_positions(conf, s),
                             name=name)
    common.write(conf, _render(conf, report))
    if not report.ok:
        return common.EXIT_CONSTRAINT


def select(args=None):
    """Report the appropriate unitary operator sets for a state."""
    return common.run(_select, args, [
        common.STATE_OPT, common.POSITIONS_OPT, FILTER_OPT,
        common.FORMAT_OPT, common.OUT_OPT])


def _compare(conf):
    name, s = common.load_state(conf.state)
    comparison = selector.compare_methods(
        s, oracle=conf.oracle,
        positions=_positions(conf, s),
        name=name)
    common.write(conf, _render(conf, comparison))
    if not comparison.ok:
        return common.EXIT_CONSTRAINT


def compare(args=None):
    """Compare the verifying sets of both constructions on a state."""
    return common.run(_compare, args, [
        common.STATE_OPT, common.POSITIONS_OPT,
        cfg.BoolOpt("oracle", default=False,
                    help="Also check every subgroup of the right order."),
        common.FORMAT_OPT, common.OUT_OPT])
