"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - ProblemSpec (line 83):
            - _split_vector(value) (line 116)
            - _split_params(value) (line 125)
        - ExperimentManifest (line 140):
            - write(path: Path) -> Path (line 153)
        - build_parser() -> argparse.ArgumentParser (line 189)
        - load_problem(args: argparse.Namespace) -> ProblemSpec (line 301)
        - run_ml(problem, args, result) (line 417)
        - run_potential(problem, args, result) (line 432)
        - run_simulate(problem, args, result) (line 442)
        - run_solve_const(problem, args, result) (line 460)
        - run_solve_timedep(problem, args, result) (line 476)
        - run_solve_psido(problem, args, result) (line 498)
        - run_verify(problem, args, result) (line 523)
        - run_selfcheck(problem, args, result) (line 554)
        - run(argv: Optional[Sequence[str]] = None) -> int (line 582)
        - main(argv: Optional[Sequence[str]] = None) -> int (line 645)
    --- END AUTO-GENERATED DOCSTRING ---

Command-line front end.

Every subcommand writes its artifacts plus ``manifest.json`` into ``--out``.
Problem parameters come from a ``KEY=value`` problem file (``--config``), an
earlier manifest (``--manifest``) and command-line flags, in increasing order
of precedence. The manifest carries no timestamps, so re-running it with the
same version reproduces every output byte for byte.

Exit codes: 0 success, 2 invalid input, 3 numerical guard tripped.

Usage:
    genfrac ml --nu "stable(beta=0.5,c=1)" --z 1 --lambda 1 --samples 100000 --seed 7
    genfrac solve-const --config problem.env --out run1 --plot
    genfrac verify --nu "stable(beta=0.5)" --matrix "-1" --Y 1 --solution run1/solution.csv
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd
from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError as PydanticValidationError, field_validator

from genfrac.config import GenFracConfig, export_config, setup_logging
from genfrac.errors import GenFracError, NumericalGuardError, ValidationError
from genfrac.gen_derivative import residual
from genfrac.measures.levy_measure import LevyMeasure
from genfrac.measures.measure_spec import parse_measure
from genfrac.mittag_leffler import gen_ml_operator, gen_ml_scalar
from genfrac.monitoring import RunMonitor
from genfrac.numerics.sampling import seed_value
from genfrac.plotting import plot_psido_field, plot_solution_curve
from genfrac.potential import potential_mass
from genfrac.solvers.generators import GeneratorFamily
from genfrac.solvers.homogeneous import solve_const
from genfrac.solvers.psido import SymbolFamily, parseval_check, solve_psido
from genfrac.solvers.solution import SolutionCurve
from genfrac.solvers.timedep import resolvent_curve, solve_boundary
from genfrac.subordinator_paths import simulate_ensemble
from genfrac.validation.health_checker import HealthChecker
from genfrac.validation.integrity import SolutionIntegrityChecker
from genfrac.version import __version__

logger = logging.getLogger(__name__)

COMMANDS = ('ml', 'potential', 'simulate', 'solve-const', 'solve-timedep',
            'solve-psido', 'verify', 'selfcheck')
STOCHASTIC_COMMANDS = ('ml', 'potential', 'simulate', 'solve-const', 'solve-timedep',
                       'solve-psido')

# problem-file keys that differ from field names
_FILE_KEYS = {'lambda': 'lam', 'y': 'boundary', 'g': 'source'}


class ProblemSpec(BaseModel):
    """Problem parameters shared by the subcommands."""

    model_config = ConfigDict(extra='forbid')

    nu: Optional[str] = Field(None, description="Measure specification string")
    z: Optional[float] = Field(None, description="Level z > 0")
    lam: Optional[float] = Field(None, description="Rate lambda")
    method: Optional[str] = Field(None, description="Estimator method")
    matrix: Optional[str] = Field(None, description="Matrix CSV file or inline rows 'a,b;c,d'")
    boundary: Optional[List[float]] = Field(None, description="Boundary vector Y")
    source: Optional[List[float]] = Field(None, description="Constant source vector g")
    a: float = Field(0.0, description="Boundary point")
    grid_max: Optional[float] = Field(None, description="Right end of the grid")
    grid_points: Optional[int] = Field(None, description="Number of grid intervals")
    lower_bound: Optional[List[float]] = Field(None, description="Declared (beta, C) with nu >= C nu_beta")
    family: Optional[str] = Field(None, description="Built-in generator family")
    family_params: Dict[str, Any] = Field(default_factory=dict, description="Family parameters")
    table: Optional[str] = Field(None, description="Piecewise-constant generator table CSV")
    t: Optional[float] = Field(None, description="Path horizon for simulate")
    x: float = Field(0.0, description="Path start for simulate")
    symbol: Optional[str] = Field(None, description="Built-in symbol")
    symbol_params: Dict[str, Any] = Field(default_factory=dict, description="Symbol parameters")
    n: int = Field(256, description="Fourier nodes")
    length: float = Field(20.0, description="Period of the spatial torus")
    t_max: Optional[float] = Field(None, description="Right end of the time grid")
    t_points: int = Field(32, description="Time grid intervals")
    source_width: float = Field(1.0, description="Width of the Gaussian source profile")
    solution: Optional[str] = Field(None, description="Solution CSV to verify")
    tolerance: float = Field(5e-3, description="Residual tolerance for verify")

    @field_validator('boundary', 'source', 'lower_bound', mode='before')
    @classmethod
    def _split_vector(cls, value):
        if isinstance(value, str):
            return [float(v) for v in value.replace(';', ',').split(',') if v.strip()]
        if isinstance(value, (int, float)):
            return [float(value)]
        return value

    @field_validator('family_params', 'symbol_params', mode='before')
    @classmethod
    def _split_params(cls, value):
        if value is None:
            return {}
        if not isinstance(value, str):
            return value
        params: Dict[str, Any] = {}
        for item in filter(None, (part.strip() for part in value.split(','))):
            if '=' not in item:
                raise ValueError(f"parameter '{item}' is not of the form key=value")
            key, raw = (s.strip() for s in item.split('=', 1))
            # colon-separated entries are vectors, e.g. rates=1:2
            params[key] = [float(v) for v in raw.split(':')] if ':' in raw else float(raw)
        return params


class ExperimentManifest(BaseModel):
    """Everything needed to reproduce one run."""

    command: str = Field(..., description="Subcommand")
    measure: Optional[str] = Field(None, description="Measure specification")
    params: Dict[str, Any] = Field(..., description="Problem parameters")
    n_samples: Optional[int] = Field(None, description="Monte Carlo paths")
    eps: Optional[float] = Field(None, description="Requested truncation level")
    seed: Optional[int] = Field(None, description="Master seed")
    grid: Optional[Dict[str, Any]] = Field(None, description="Grid specification")
    outputs: List[str] = Field(default_factory=list, description="Artifact file names")
    version: str = Field(__version__, description="genfrac version")

    def write(self, path: Path) -> Path:
        path.write_text(json.dumps(self.model_dump(), indent=2, sort_keys=True) + '\n',
                        encoding='utf-8')
        return path


def _json_default(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def _write_json(path: Path, data: Dict[str, Any]) -> Path:
    path.write_text(json.dumps(data, indent=2, sort_keys=True, default=_json_default) + '\n',
                    encoding='utf-8')
    return path


def _add_common_flags(parser: argparse.ArgumentParser):
    group = parser.add_argument_group('common')
    group.add_argument('--out', default='.', help='Output directory (created if missing)')
    group.add_argument('--seed', type=int, help='Master seed (falls back to GENFRAC_SEED)')
    group.add_argument('--samples', type=int, help='Monte Carlo paths N')
    group.add_argument('--eps', type=float, help='Truncation level for infinite measures')
    group.add_argument('--workers', type=int, help='Worker threads (0 = all cores)')
    group.add_argument('--config', help='Problem file with KEY=value lines')
    group.add_argument('--manifest', help='Manifest of an earlier run to reproduce')
    group.add_argument('--log-level', help='Logging level')
    group.add_argument('--metrics', action='store_true', help='Write metrics.json')
    group.add_argument('--plot', action='store_true', help='Write an SVG plot')


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog='genfrac',
        description='Monte Carlo solvers for generalized fractional evolution equations')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _add_common_flags(p)
        return p

    p = command('ml', 'Generalized Mittag-Leffler value E_(nu),z(-lambda) or E_(nu),z(A)')
    p.add_argument('--nu')
    p.add_argument('--z', type=float)
    p.add_argument('--lambda', dest='lam', type=float)
    p.add_argument('--matrix', help='Matrix A: CSV file or inline rows "a,b;c,d"')
    p.add_argument('--method')

    p = command('potential', 'Potential measure U_lambda([0, z])')
    p.add_argument('--nu')
    p.add_argument('--z', type=float)
    p.add_argument('--lambda', dest='lam', type=float)
    p.add_argument('--method')

    p = command('simulate', 'Sample subordinator paths')
    p.add_argument('--nu')
    p.add_argument('--t', type=float, help='Horizon')
    p.add_argument('--x', type=float, help='Start position')

    p = command('solve-const', 'Constant-generator boundary value problem')
    p.add_argument('--nu')
    p.add_argument('--matrix')
    p.add_argument('--Y', dest='boundary')
    p.add_argument('--g', dest='source')
    p.add_argument('--a', type=float)
    p.add_argument('--grid-max', type=float)
    p.add_argument('--grid-points', type=int)
    p.add_argument('--method')
    p.add_argument('--lower-bound', help='Declared "beta,C" for non-contractions')

    p = command('solve-timedep', 'Boundary value problem with an x-dependent generator')
    p.add_argument('--nu')
    p.add_argument('--family', help='Built-in family name')
    p.add_argument('--family-params', help='"key=value,..." with vectors as "1:2"')
    p.add_argument('--table', help='Piecewise-constant generator table CSV')
    p.add_argument('--Y', dest='boundary')
    p.add_argument('--g', dest='source')
    p.add_argument('--lambda', dest='lam', type=float, help='Compute the resolvent R_lambda g')
    p.add_argument('--a', type=float)
    p.add_argument('--grid-max', type=float)
    p.add_argument('--grid-points', type=int)

    p = command('solve-psido', 'Spatially homogeneous pseudo-differential problem')
    p.add_argument('--nu')
    p.add_argument('--symbol', help='heat, frac_laplace or transport')
    p.add_argument('--symbol-params', help='"key=value,..."')
    p.add_argument('--n', type=int, help='Fourier nodes')
    p.add_argument('--length', type=float, help='Period of the torus')
    p.add_argument('--a', type=float)
    p.add_argument('--t-max', type=float)
    p.add_argument('--t-points', type=int)
    p.add_argument('--source-width', type=float)

    p = command('verify', 'Residual report for a solution CSV')
    p.add_argument('--nu')
    p.add_argument('--solution', help='Solution CSV')
    p.add_argument('--matrix')
    p.add_argument('--family')
    p.add_argument('--family-params')
    p.add_argument('--table')
    p.add_argument('--Y', dest='boundary')
    p.add_argument('--g', dest='source')
    p.add_argument('--a', type=float)
    p.add_argument('--tolerance', type=float)

    p = command('selfcheck', 'Deterministic oracle checks and host resources')
    p.add_argument('--export-config', action='store_true', help='Write the active settings to config.json')
    return parser


_COMMON = ('command', 'out', 'seed', 'samples', 'eps', 'workers', 'config', 'manifest',
           'log_level', 'metrics', 'plot', 'monitor', 'export_config')


def _read_manifest(path: str, command: str) -> Dict[str, Any]:
    path = Path(path)
    if not path.is_file():
        raise ValidationError(f"manifest not found: {path}")
    try:
        data = json.loads(path.read_text(encoding='utf-8'))
    except json.JSONDecodeError as e:
        raise ValidationError(f"manifest {path} is not valid JSON: {e}") from e
    is_valid, messages = SolutionIntegrityChecker().validate_manifest(data)
    if not is_valid:
        raise ValidationError(f"invalid manifest {path}: {'; '.join(messages)}")
    for message in messages:
        logger.warning(message)
    try:
        manifest = ExperimentManifest(**data)
    except PydanticValidationError as e:
        raise ValidationError(f"invalid manifest {path}: {e.error_count()} field errors") from e
    if manifest.command != command:
        raise ValidationError(
            f"manifest {path} belongs to '{manifest.command}', not '{command}'")
    if manifest.version != __version__:
        logger.warning(f"Manifest written by version {manifest.version}; running {__version__}")
    return manifest.model_dump()


def load_problem(args: argparse.Namespace) -> ProblemSpec:
    """
    Merge manifest, problem file and flags into a validated ProblemSpec.

    Run-level settings from the manifest (seed, samples, eps) are copied onto
    ``args`` when the flags leave them unset.
    """
    values: Dict[str, Any] = {}
    if args.manifest:
        manifest = _read_manifest(args.manifest, args.command)
        values.update(manifest['params'])
        for key, field_name in (('seed', 'seed'), ('n_samples', 'samples'), ('eps', 'eps')):
            if getattr(args, field_name) is None:
                setattr(args, field_name, manifest[key])
    if args.config:
        path = Path(args.config)
        if not path.is_file():
            raise ValidationError(f"problem file not found: {path}")
        for key, value in dotenv_values(path).items():
            key = key.lower()
            if key in ('seed', 'samples', 'eps', 'workers'):
                if getattr(args, key) is None and value not in (None, ''):
                    try:
                        setattr(args, key, float(value) if key == 'eps' else int(value))
                    except ValueError as e:
                        raise ValidationError(
                            f"invalid {key.upper()} in problem file {path}: {value!r}") from e
                continue
            values[_FILE_KEYS.get(key, key)] = value
    for key, value in vars(args).items():
        if key not in _COMMON and value is not None:
            values[key] = value
    try:
        return ProblemSpec(**values)
    except PydanticValidationError as e:
        details = '; '.join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}"
                            for err in e.errors())
        raise ValidationError(f"invalid problem parameters: {details}") from e


def _require(problem: ProblemSpec, name: str, flag: str):
    value = getattr(problem, name)
    if value is None:
        raise ValidationError(f"missing required parameter {flag}")
    return value


def _measure(problem: ProblemSpec) -> LevyMeasure:
    return parse_measure(_require(problem, 'nu', '--nu'))


def _parse_matrix(text: str) -> np.ndarray:
    path = Path(text)
    if path.suffix == '.csv' or path.is_file():
        if not path.is_file():
            raise ValidationError(f"matrix file not found: {path}")
        matrix = pd.read_csv(path, header=None).to_numpy(dtype=float)
    else:
        try:
            matrix = np.array([[float(v) for v in row.split(',')] for row in text.split(';')])
        except ValueError as e:
            raise ValidationError(f"cannot parse matrix '{text}': {e}") from e
    matrix = np.atleast_2d(matrix)
    if matrix.shape[0] != matrix.shape[1]:
        raise ValidationError(f"matrix must be square, got shape {matrix.shape}")
    return matrix


def _family(problem: ProblemSpec) -> Optional[GeneratorFamily]:
    if problem.matrix is not None:
        return GeneratorFamily.constant(_parse_matrix(problem.matrix))
    if problem.table is not None:
        return GeneratorFamily.from_table(problem.table)
    if problem.family is not None:
        return GeneratorFamily.from_builtin(problem.family, **problem.family_params)
    return None


def _grid(problem: ProblemSpec) -> np.ndarray:
    grid_max = problem.a + 1.0 if problem.grid_max is None else problem.grid_max
    if not grid_max > problem.a:
        raise ValidationError(f"grid end {grid_max} must exceed a={problem.a}")
    points = problem.grid_points or GenFracConfig.GRID_POINTS_PER_UNIT
    return np.linspace(problem.a, grid_max, points + 1)


def _grid_spec(grid: np.ndarray) -> Dict[str, Any]:
    return {'start': float(grid[0]), 'stop': float(grid[-1]), 'intervals': int(grid.size - 1)}


def _constant_source(problem: ProblemSpec):
    if problem.source is None:
        return None
    return np.asarray(problem.source, dtype=float)


class _Run:
    """Mutable bag of what a command produced."""

    def __init__(self, out: Path):
        self.out = out
        self.outputs: List[str] = []
        self.grid: Optional[Dict[str, Any]] = None
        self.curve: Optional[SolutionCurve] = None
        self.field = None
        self.exit_code = 0

    def json(self, name: str, data: Dict[str, Any]):
        _write_json(self.out / name, data)
        self.outputs.append(name)

    def frame(self, name: str, frame: pd.DataFrame):
        frame.to_csv(self.out / name, index=False, float_format='%.17g', encoding='utf-8')
        self.outputs.append(name)


def run_ml(problem: ProblemSpec, args: argparse.Namespace, result: _Run):
    nu = _measure(problem)
    z = _require(problem, 'z', '--z')
    method = problem.method or 'first_passage'
    if problem.matrix is not None:
        value = gen_ml_operator(nu, z, _parse_matrix(problem.matrix), method=method,
                                n_samples=args.samples, eps=args.eps, seed=args.seed,
                                workers=args.workers)
    else:
        lam = _require(problem, 'lam', '--lambda')
        value = gen_ml_scalar(nu, z, lam, method=method, n_samples=args.samples,
                              eps=args.eps, seed=args.seed, workers=args.workers)
    result.json('result.json', value.to_dict())


def run_potential(problem: ProblemSpec, args: argparse.Namespace, result: _Run):
    nu = _measure(problem)
    z = _require(problem, 'z', '--z')
    lam = 0.0 if problem.lam is None else problem.lam
    estimate = potential_mass(nu, lam, z, method=problem.method or 'auto',
                              n_samples=args.samples, eps=args.eps, seed=args.seed,
                              workers=args.workers)
    result.json('result.json', estimate.to_dict())


def run_simulate(problem: ProblemSpec, args: argparse.Namespace, result: _Run):
    nu = _measure(problem)
    horizon = _require(problem, 't', '--t')
    if horizon < 0:
        raise ValidationError(f"horizon must be nonnegative, got {horizon}")
    ensemble = simulate_ensemble(nu, horizon, problem.x, args.samples, seed=args.seed,
                                 eps=args.eps, workers=args.workers)
    result.frame('paths.csv', ensemble.to_frame())
    result.json('result.json', ensemble.summary())


def _write_curve(curve: SolutionCurve, result: _Run):
    curve.to_csv(result.out / 'solution.csv')
    result.outputs.append('solution.csv')
    result.json('result.json', curve.summary())
    result.curve = curve


def run_solve_const(problem: ProblemSpec, args: argparse.Namespace, result: _Run):
    nu = _measure(problem)
    matrix = _parse_matrix(_require(problem, 'matrix', '--matrix'))
    boundary = _require(problem, 'boundary', '--Y')
    grid = _grid(problem)
    lower_bound = tuple(problem.lower_bound) if problem.lower_bound else None
    if lower_bound is not None and len(lower_bound) != 2:
        raise ValidationError("--lower-bound takes two numbers: beta,C")
    curve = solve_const(nu, matrix, boundary, g=_constant_source(problem), a=problem.a,
                        grid=grid, method=problem.method or 'first_passage',
                        n_samples=args.samples, eps=args.eps, seed=args.seed,
                        workers=args.workers, lower_bound=lower_bound)
    result.grid = _grid_spec(grid)
    _write_curve(curve, result)


def run_solve_timedep(problem: ProblemSpec, args: argparse.Namespace, result: _Run):
    nu = _measure(problem)
    family = _family(problem)
    if family is None:
        raise ValidationError("missing required parameter --family or --table")
    grid = _grid(problem)
    source = _constant_source(problem)
    if problem.lam is not None:
        if source is None:
            raise ValidationError("the resolvent needs a source --g")
        curve = resolvent_curve(nu, family, problem.lam, source, problem.a, grid,
                                n_samples=args.samples, eps=args.eps, seed=args.seed,
                                workers=args.workers)
    else:
        boundary = _require(problem, 'boundary', '--Y')
        curve = solve_boundary(nu, family, boundary, source, problem.a, grid,
                               n_samples=args.samples, eps=args.eps, seed=args.seed,
                               workers=args.workers)
    result.grid = _grid_spec(grid)
    _write_curve(curve, result)


def run_solve_psido(problem: ProblemSpec, args: argparse.Namespace, result: _Run):
    nu = _measure(problem)
    name = _require(problem, 'symbol', '--symbol')
    symbols = SymbolFamily.from_builtin(name, problem.n, problem.length, **problem.symbol_params)
    t_max = problem.a + 1.0 if problem.t_max is None else problem.t_max
    if not t_max > problem.a:
        raise ValidationError(f"time grid end {t_max} must exceed a={problem.a}")
    t_grid = np.linspace(problem.a, t_max, problem.t_points + 1)
    profile = np.exp(-0.5 * (symbols.nodes / problem.source_width) ** 2)
    solution = solve_psido(nu, symbols, profile, problem.a, t_grid, n_samples=args.samples,
                           eps=args.eps, seed=args.seed, workers=args.workers)
    result.frame('field.csv', solution.to_frame())
    result.frame('field_stderr.csv', solution.to_frame(std_error=True))
    summary = dict(solution.metadata)
    summary.update({
        'n_times': int(solution.t_grid.size),
        'n_nodes': int(solution.nodes.size),
        'max_std_error': float(np.max(solution.std_error)),
        'parseval_gap': parseval_check(solution.values),
    })
    result.json('result.json', summary)
    result.grid = _grid_spec(t_grid)
    result.field = solution


def run_verify(problem: ProblemSpec, args: argparse.Namespace, result: _Run):
    nu = _measure(problem)
    path = Path(_require(problem, 'solution', '--solution'))
    if not path.is_file():
        raise ValidationError(f"solution file not found: {path}")
    explicit_a = 'a' in problem.model_fields_set
    curve = SolutionCurve.from_csv(path, metadata={'a': problem.a} if explicit_a else None)

    checker = SolutionIntegrityChecker()
    is_valid, messages = checker.validate_solution_curve(curve, boundary=problem.boundary)
    if not is_valid:
        raise ValidationError("solution failed integrity checks: " + '; '.join(messages))

    family = _family(problem) or GeneratorFamily.constant(np.zeros((curve.dimension,) * 2))
    if family.dimension != curve.dimension:
        raise ValidationError(
            f"generator dimension {family.dimension} does not match solution dimension {curve.dimension}")
    source = _constant_source(problem)
    g: Optional[Callable] = None if source is None else (lambda x: source)
    report = residual(curve, nu, family, g=g, a=curve.a)
    threshold = problem.tolerance + 5.0 * curve.max_std_error()
    data = report.to_dict()
    data.update({
        'solution': path.name,
        'threshold': threshold,
        'passes': report.passes(threshold),
        'integrity_messages': messages,
    })
    result.json('result.json', data)


def run_selfcheck(problem: ProblemSpec, args: argparse.Namespace, result: _Run):
    status = HealthChecker(monitor=args.monitor).run_health_checks()
    # timestamps and host load would break byte-identical reruns
    report = {
        'overall_status': status['overall_status'],
        'components': status['components'],
        'errors': status['errors'],
    }
    result.json('result.json', report)
    if args.export_config:
        export_config(str(result.out / 'config.json'))
        result.outputs.append('config.json')
    if status['overall_status'] == 'unhealthy':
        result.exit_code = NumericalGuardError.exit_code


HANDLERS = {
    'ml': run_ml,
    'potential': run_potential,
    'simulate': run_simulate,
    'solve-const': run_solve_const,
    'solve-timedep': run_solve_timedep,
    'solve-psido': run_solve_psido,
    'verify': run_verify,
    'selfcheck': run_selfcheck,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse ``argv`` and run one subcommand.

    Args:
        argv: Arguments without the program name

    Returns:
        Exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    monitor = RunMonitor()
    args.monitor = monitor

    try:
        problem = load_problem(args)
        if args.samples is None:
            args.samples = 10000
        if args.samples <= 0:
            raise ValidationError(f"--samples must be positive, got {args.samples}")
        if args.command in STOCHASTIC_COMMANDS and args.seed is None:
            # a drawn seed is recorded so the manifest still reproduces the run
            args.seed = seed_value(None)
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        result = _Run(out)

        with monitor.track(args.command, n_samples=args.samples):
            HANDLERS[args.command](problem, args, result)

        if args.plot:
            if result.curve is not None:
                plot_solution_curve(result.curve, out / 'plot.svg', title=args.command)
                result.outputs.append('plot.svg')
            elif result.field is not None:
                plot_psido_field(result.field, out / 'plot.svg', title=args.command)
                result.outputs.append('plot.svg')

        stochastic = args.command in STOCHASTIC_COMMANDS
        manifest = ExperimentManifest(
            command=args.command,
            measure=problem.nu,
            params=problem.model_dump(exclude_none=True),
            n_samples=args.samples if stochastic else None,
            eps=args.eps,
            seed=args.seed if stochastic else None,
            grid=result.grid,
            outputs=sorted(result.outputs),
        )
        manifest.write(out / 'manifest.json')
        if args.metrics:
            monitor.write_metrics(out / 'metrics.json')
        print(json.dumps({'command': args.command, 'out': str(out),
                          'outputs': manifest.outputs}, sort_keys=True))
        return result.exit_code
    except GenFracError as e:
        print(f"genfrac {args.command}: error: {e}", file=sys.stderr)
        logger.debug("Run failed", exc_info=True)
        return e.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point."""
    return run(argv)


if __name__ == '__main__':
    sys.exit(main())
