"""
Runs behind the commands and API endpoints, each returning a Table.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from core.bo import baxter_report, born_report, verblunsky_bo
from core.closedforms import Example1Family, Example2Family
from core.config import NORMALIZE_NONE
from core.gi import gi_bound_report
from core.opuc import BO, MOMENTS, verblunsky_from_moments
from core.toeplitz import Probe, build_section, invert_section, theorem1_report
from core.wienerhopf import factorize, normalize_weight, winding_number

logger = logging.getLogger(__name__)

BOTH = 'both'

THEOREM1_HEADER = ['n', 'j', 'k', 'error', 'bound', 'c_calibrated', 'pass']
VERBLUNSKY_HEADER = ['n', 'alpha_re', 'alpha_im', 'method', 'diag']
BAXTER_HEADER = ['n', 'phi_zero_abs', 'nu', 'increment', 'partial_sum']
BORN_HEADER = [
    'n', 'phi_zero_re', 'phi_zero_im', 'r_inv_re', 'r_inv_im',
    'difference_abs', 'weighted', 'partial_sum', 'ratio',
]
GI_HEADER = [
    'n', 'alpha_re', 'alpha_im', 'intermediate', 'intermediate_bound',
    'ibragimov4', 'ibragimov4_bound',
]
EXAMPLE_HEADER = ['n', 'alpha_closed', 'alpha_moments', 'alpha_bo']
DEFAULT_PROBES = ('0,0', 'n,n')


@dataclass
class Table:
    header: List[str]
    rows: List[tuple] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    footer: Optional[str] = None

    def records(self):
        return [dict(zip(self.header, row)) for row in self.rows]


def prepare_symbol(spec, config, default_normalize=NORMALIZE_NONE):
    """Build the series of a SymbolSpec, normalized if the config asks."""
    config = config.with_normalize(default_normalize)
    series = spec.build(config)
    logger.debug(
        'Built symbol of half bandwidth %d (normalize=%s)',
        series.half_bandwidth, config.normalize,
    )
    if config.normalized:
        series = normalize_weight(series, config.grid, config.vanish_tol)
    return series, config


def _real(value):
    return None if value is None else float(complex(value).real)


def _imag(value):
    return None if value is None else float(complex(value).imag)


def factorization_payload(phi, config):
    result = factorize(phi, config.grid, config.vanish_tol,
                       half_bandwidth=config.band,
                       compress_tol=config.compress_tol)
    return {
        'plus': series_payload(result.plus),
        'minus': series_payload(result.minus),
        'plus_inv': series_payload(result.plus_inv),
        'minus_inv': series_payload(result.minus_inv),
        'log_symbol': series_payload(result.log_symbol),
        'winding': result.winding,
        'reconstruction_error': result.reconstruction_error(phi, config.grid),
    }


def series_payload(series):
    """{index: [re, im]} with string keys, the same shape as the input."""
    return {
        str(k): [value.real, value.imag]
        for k, value in series.to_dict().items()
    }


def winding_table(phi, config):
    winding = winding_number(phi, config.grid, config.vanish_tol)
    return Table(['winding'], [(winding,)], {'winding': winding})


def invert_table(phi, n):
    inverse = invert_section(build_section(phi, n))
    rows = [
        (j, k, float(inverse[j, k].real), float(inverse[j, k].imag))
        for j in range(n + 1) for k in range(n + 1)
    ]
    return Table(['j', 'k', 're', 'im'], rows, {'n': n})


def theorem1_table(phi, config, probes=DEFAULT_PROBES):
    nu = config.beurling_weight()
    report = theorem1_report(
        phi,
        range(config.nmin, config.nmax + 1),
        [Probe.parse(probe) for probe in probes],
        nu=nu,
        size=config.grid,
        vanish_tol=config.vanish_tol,
        slack=config.calibration_slack,
    )
    table = Table(list(THEOREM1_HEADER))
    for row in report.rows:
        table.rows.append((
            row.n, row.j, row.k, row.error, row.bound, row.c_calibrated,
            row.passed,
        ))
    table.summary = {
        'positive': report.positive,
        'singular': report.singular_ns,
        'passed': report.passed,
        'probes': {
            str(item.probe): {
                'c_calibrated': item.c_calibrated,
                'fitted_rate': item.fitted_rate,
                'tninf_constant': item.tninf_constant,
                'passed': item.passed,
            }
            for item in report.summaries
        },
    }
    return table


def verblunsky_table(w, config, method=BOTH):
    reports = []
    if method in (MOMENTS, BOTH):
        reports.append(verblunsky_from_moments(w, config.nmax))
    if method in (BO, BOTH):
        reports.append(verblunsky_bo(
            w, config.nmax, config.bo_size, config.grid, config.vanish_tol,
            config.solve_tol, config.compress_tol,
        ))
    header = list(VERBLUNSKY_HEADER)
    deltas = {}
    if method == BOTH:
        header.append('delta')
        moments, bo = reports
        for left, right in zip(moments.rows, bo.rows):
            if left.alpha is not None and right.alpha is not None:
                deltas[left.n] = abs(left.alpha - right.alpha)

    table = Table(header)
    for n in range(1, config.nmax + 1):
        for report in reports:
            row = report.rows[n - 1]
            values = (n, _real(row.alpha), _imag(row.alpha), row.method,
                      row.diagnostic)
            if method == BOTH:
                values += (deltas.get(n),)
            table.rows.append(values)
    table.summary = {
        'max_delta': max(deltas.values()) if deltas else None,
        'n0': reports[-1].n0,
        'failed': sorted({row.n for r in reports for row in r.failed}),
    }
    return table


def baxter_table(w, config):
    nu = config.beurling_weight()
    report = baxter_report(w, nu, config.nmax, config.bo_size, config.grid,
                           config.vanish_tol, config.solve_tol)
    table = Table(list(BAXTER_HEADER))
    for row in report.rows:
        table.rows.append((row.n, row.phi_zero_abs, row.nu, row.increment,
                           row.partial_sum))
    table.summary = {
        'weight': repr(nu),
        'increment_ratio': report.increment_ratio,
        'increments_decay': report.increments_decay,
        'in_class': report.in_class,
        'n0': report.n0,
    }
    return table


def born_table(w, config, pole=None):
    nu = config.beurling_weight()
    report = born_report(w, nu, config.nmax, pole=pole, size=config.bo_size,
                         grid=config.grid, vanish_tol=config.vanish_tol,
                         solve_tol=config.solve_tol)
    header = list(BORN_HEADER)
    if pole is not None:
        header += ['residue_re', 'residue_im']
    table = Table(header)
    for row in report.rows:
        values = (
            row.n, _real(row.phi_zero), _imag(row.phi_zero),
            _real(row.r_inv_coefficient), _imag(row.r_inv_coefficient),
            None if row.difference is None else abs(row.difference),
            row.weighted, row.partial_sum, row.ratio,
        )
        if pole is not None:
            values += (_real(row.residue), _imag(row.residue))
        table.rows.append(values)
    table.summary = {
        'weight': repr(nu),
        'fitted_ratio': report.fitted_ratio,
        'increment_ratio': report.increment_ratio,
        'tail_estimate': report.tail_estimate,
        'in_class': report.in_class,
    }
    return table


def gi_table(w, config):
    bound = gi_bound_report(w, config.nmax, config.bo_size, config.grid,
                            config.vanish_tol, config.solve_tol,
                            config.rho_margin)
    table = Table(list(GI_HEADER))
    for row in bound.rows:
        table.rows.append((
            row.n, _real(row.alpha), _imag(row.alpha), row.intermediate,
            row.intermediate_bound, row.ibragimov4, row.ibragimov4_bound,
        ))
    table.summary = {
        'n0': bound.n0,
        'rho': bound.rho,
        'lhs': bound.lhs,
        'rhs': bound.rhs,
        'truncated_at': bound.truncated_at,
        'passed': bound.passed,
    }
    table.footer = 'PASS' if bound.passed else 'FAIL'
    return table


def _example_table(family, weight, config, residue, column='residue'):
    moments = verblunsky_from_moments(weight, config.nmax)
    bo = verblunsky_bo(weight, config.nmax, config.bo_size, config.grid,
                       config.vanish_tol, config.solve_tol,
                       config.compress_tol)
    table = Table(EXAMPLE_HEADER + [column])
    for n in range(config.nmax):
        table.rows.append((
            n, family.alpha(n), _real(moments.alpha(n)), _real(bo.alpha(n)),
            residue(n),
        ))
    return table


def example1_table(a, config):
    family = Example1Family(a)
    table = _example_table(
        family, family.weight(), config,
        lambda n: -family.alpha(n) * family.mu_plus ** (n + 2),
        column='minus_residue',
    )
    table.summary = {
        'a': family.a,
        'mu_plus': family.mu_plus,
        'mu_minus': family.mu_minus,
        'residue': family.residue,
        'minus_residue': -family.residue,
    }
    return table


def example2_table(q, config, terms=None):
    family = Example2Family(q, terms)
    table = _example_table(
        family, family.weight(config.compress_tol), config,
        lambda n: family.alpha(n) * family.pole ** (n + 2),
    )
    table.summary = {
        'q': family.q,
        'terms': family.terms,
        'tail_bound': family.tail_bound,
        'pole': family.pole,
        'residue': family.residue,
    }
    return table

