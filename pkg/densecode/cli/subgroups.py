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
from densecode import service
from densecode import subgroup
from densecode import utils


LOG = daiquiri.getLogger(__name__)

QUBITS_OPT = cfg.IntOpt(
    "qubits", min=1, required=True,
    help="Number t of qubits of the shared state; the subgroups have "
    "order 2^t.")


def _provenance(group):
    p = group.provenance
    fields = ["%s=%s" % (k, p[k]) for k in sorted(p) if k != "method"]
    return " ".join(fields)


def format_listing(groups, label_set, fmt, title):
    if fmt == codec.FORMAT_JSON:
        return common.dump_json([
            dict(g.jsonify(), key=g.format_key(),
                 aliases=label_set.aliases_for(g))
            for g in groups])
    rows = [(i + 1, g.format_key(), " = ".join(label_set.aliases_for(g)),
             g.format_elements(" "), _provenance(g))
            for i, g in enumerate(groups)]
    header = ("#", "key", "aliases", "elements", "provenance")
    if fmt == codec.FORMAT_CSV:
        return codec.to_csv([header] + rows)
    lines = ["# %s" % title, "",
             "| %s |" % " | ".join(header),
             "|%s" % ("---|" * len(header))]
    lines.extend("| %s |" % " | ".join(map(str, row)) for row in rows)
    return "\n".join(lines) + "\n"


def _construct(conf):
    t = conf.qubits
    with utils.StopWatch() as sw:
        groups = subgroup.construct_mgp_subgroups(t)
    LOG.info("Constructed %d subgroup(s) of order 2^%d in %.2fs "
             "(%d raw candidates)", len(groups), t, sw.elapsed(),
             len(subgroup.mgp_candidates(t)))
    common.write(conf, format_listing(
        groups, service.get_labels(conf), common.output_format(conf),
        "Subgroups of order 2^%d built from two lines (%d)"
        % (t, len(groups))))


def construct(args=None):
    """List the subgroups built by the two-line construction."""
    return common.run(_construct, args, [
        QUBITS_OPT, common.FORMAT_OPT, common.OUT_OPT])


def _oracle(conf):
    t = conf.qubits
    with utils.StopWatch() as sw:
        report = subgroup.audit(t)
    LOG.info("Audited t=%d in %.2fs", t, sw.elapsed())
    fmt = common.output_format(conf)
    label_set = service.get_labels(conf)
    summary = "constructed %d / total %d / missing %d" % (
        len(report.constructed), len(report.total), len(report.missing))
    if fmt == codec.FORMAT_JSON:
        common.write(conf, common.dump_json({
            "t": report.t, "n": report.n,
            "constructed": len(report.constructed),
            "total": len(report.total),
            "missing": [dict(g.jsonify(), key=g.format_key(),
                             check_support=g.check_support())
                        for g in report.missing],
        }))
        return
    text = summary + "\n"
    if report.missing:
        if fmt == codec.FORMAT_MARKDOWN:
            text += "\n"
        text += format_listing(
            [g.with_provenance(check_support=",".join(
                map(str, g.check_support()))) for g in report.missing],
            label_set, fmt, "Subgroups missed by the construction")
    common.write(conf, text)


def oracle(args=None):
    """Compare the construction with every subgroup of order 2^t."""
    return common.run(_oracle, args, [
        QUBITS_OPT, common.FORMAT_OPT, common.OUT_OPT])
