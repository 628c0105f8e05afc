"""Experiment configuration loaded from YAML."""

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import yaml

from ..engine import DescentOptions
from ..errors import ConfigError, Diagnostic
from ..operators import (
    IntervalSet,
    PiecewiseSymbol,
    RankOneTerm,
    discrete_eigenvalues_rank_one,
    parse_pi_multiple,
)
from ..operators.intervals import to_radians
from ..utils.constants import (
    DEFAULT_PRECISION,
    GAP_DELTA,
    MAX_HALF_WIDTH,
    MAX_PRECISION,
    MIN_PRECISION,
    SZEGO_EPSILON,
)

PRESET_DIR = Path(__file__).parent / "presets"
TOP_LEVEL_KEYS = {
    "version",
    "label",
    "operator",
    "n_list",
    "window_scale",
    "lambdas",
    "epsilon",
    "gap_delta",
    "max_half_width",
    "descent",
    "grid",
    "scan",
    "output",
}
OUTPUT_FORMATS = ("csv", "json")

Fail = Callable[[str, str], None]


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _line_index(text: str) -> Dict[str, int]:
    """Map dotted field paths to 1-based line numbers in the YAML source."""
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.YAMLError:
        return {}
    lines: Dict[str, int] = {}

    def walk(node, path: str) -> None:
        if isinstance(node, yaml.MappingNode):
            for key, value in node.value:
                child = f"{path}.{key.value}" if path else str(key.value)
                lines[child] = key.start_mark.line + 1
                walk(value, child)
        elif isinstance(node, yaml.SequenceNode):
            for i, item in enumerate(node.value):
                child = f"{path}[{i}]"
                lines[child] = item.start_mark.line + 1
                walk(item, child)

    if root is not None:
        walk(root, "")
    return lines


def _line_for(lines: Dict[str, int], path: str) -> Optional[int]:
    while path:
        if path in lines:
            return lines[path]
        cut = max(path.rfind("."), path.rfind("["))
        path = path[:cut] if cut > 0 else ""
    return None


def _pair(value: Any, name: str, fail: Fail, kind=_is_number) -> Optional[Tuple]:
    if not isinstance(value, (list, tuple)) or len(value) != 2 or not all(kind(v) for v in value):
        fail(name, f"expected a pair of numbers, got {value!r}")
        return None
    return tuple(value)


def _parse_symbol(operator: Any, fail: Fail) -> Optional[PiecewiseSymbol]:
    if not isinstance(operator, dict):
        fail("operator", "missing or not a mapping")
        return None
    spec = operator.get("symbol")
    if not isinstance(spec, dict):
        fail("operator.symbol", "missing or not a mapping")
        return None

    if "pieces" in spec:
        pieces = []
        for i, piece in enumerate(spec["pieces"] or []):
            where = f"operator.symbol.pieces[{i}]"
            if not isinstance(piece, dict) or not {"from", "to", "value"} <= set(piece):
                fail(where, "each piece needs 'from', 'to' and 'value'")
                continue
            if not _is_number(piece["value"]):
                fail(f"{where}.value", f"expected a number, got {piece['value']!r}")
                continue
            try:
                a, b = (to_radians(parse_pi_multiple(piece[k])) for k in ("from", "to"))
            except ValueError as e:
                fail(where, str(e))
                continue
            pieces.append((a, b, float(piece["value"])))
        try:
            return PiecewiseSymbol(tuple(pieces))
        except ValueError as e:
            fail("operator.symbol.pieces", str(e))
            return None

    if "intervals" not in spec:
        fail("operator.symbol", "needs either 'intervals' or 'pieces'")
        return None
    inside, outside = spec.get("inside", 1.0), spec.get("outside", -1.0)
    for key, value in (("inside", inside), ("outside", outside)):
        if not _is_number(value):
            fail(f"operator.symbol.{key}", f"expected a number, got {value!r}")
            return None
    try:
        interval_set = IntervalSet.from_pi_multiples(spec["intervals"] or [])
    except (TypeError, ValueError) as e:
        fail("operator.symbol.intervals", str(e))
        return None
    return PiecewiseSymbol.from_interval_set(interval_set, float(inside), float(outside))


def _parse_rank_one(operator: Any, fail: Fail) -> Optional[RankOneTerm]:
    if not isinstance(operator, dict) or operator.get("rank_one") is None:
        return None
    spec = operator["rank_one"]
    if not isinstance(spec, dict):
        fail("operator.rank_one", "expected a mapping")
        return None
    a, psi = spec.get("a"), spec.get("psi", "constant")
    if not _is_number(a):
        fail("operator.rank_one.a", f"expected a positive number, got {a!r}")
        return None

    try:
        if psi == "constant":
            return RankOneTerm.constant_psi(a)
        if isinstance(psi, dict) and isinstance(psi.get("coefficients"), list):
            coeffs = []
            for i, pair in enumerate(psi["coefficients"]):
                value = _pair(pair, f"operator.rank_one.psi.coefficients[{i}]", fail)
                if value is None:
                    return None
                coeffs.append(complex(*value))
            return RankOneTerm.from_coefficients(a, coeffs, normalize=bool(psi.get("normalize")))
    except ValueError as e:
        fail("operator.rank_one", str(e))
        return None
    fail("operator.rank_one.psi", "expected 'constant' or {coefficients: [[re, im], ...]}")
    return None


@dataclass
class ExperimentConfig:
    """
    A complete experiment: operator, truncations and output settings.

    `lambdas` of None means the discrete eigenvalues of the operator are used.
    Each n in `n_list` truncates to the window -window_scale * n .. window_scale * n.
    """

    symbol: PiecewiseSymbol
    n_list: List[int]
    window_scale: int = 1
    label: str = "experiment"
    version: str = "1.0"
    rank_one: Optional[RankOneTerm] = None
    lambdas: Optional[List[float]] = None
    epsilon: float = SZEGO_EPSILON
    gap_delta: float = GAP_DELTA
    max_half_width: Optional[float] = MAX_HALF_WIDTH
    descent: DescentOptions = field(default_factory=DescentOptions)
    grid_rect: Tuple[float, float, float, float] = (-1.5, 2.5, -1.5, 1.5)
    grid_resolution: Tuple[int, int] = (41, 31)
    scan_range: Tuple[float, float] = (-1.5, 2.5)
    scan_points: int = 401
    output_format: str = "csv"
    precision: int = DEFAULT_PRECISION
    source: Optional[Path] = None
    lines: Dict[str, int] = field(default_factory=dict, repr=False, compare=False)

    @staticmethod
    def from_dict(data: Any, lines: Optional[Dict[str, int]] = None) -> "ExperimentConfig":
        """
        Create a validated config from a parsed YAML mapping.

        Raises:
            ConfigError: With every problem found, located by field and line
        """
        lines = lines or {}
        problems: List[Diagnostic] = []

        def fail(name: str, message: str) -> None:
            problems.append(Diagnostic(name, message, _line_for(lines, name)))

        if not isinstance(data, dict):
            raise ConfigError([Diagnostic("<root>", "expected a mapping at the top level")])
        for key in sorted(set(data) - TOP_LEVEL_KEYS, key=str):
            fail(str(key), "unknown key")

        symbol = _parse_symbol(data.get("operator"), fail)
        rank_one = _parse_rank_one(data.get("operator"), fail)

        n_list = data.get("n_list")
        if not isinstance(n_list, list) or not all(_is_int(n) for n in n_list):
            fail("n_list", f"expected a list of integers, got {n_list!r}")
            n_list = []

        window_scale = data.get("window_scale", 1)
        if not _is_int(window_scale):
            fail("window_scale", f"expected an integer, got {window_scale!r}")
            window_scale = 1

        lambdas = data.get("lambdas", "auto")
        if lambdas == "auto":
            lambdas = None
        elif not isinstance(lambdas, list) or not all(_is_number(v) for v in lambdas):
            fail("lambdas", f"expected 'auto' or a list of numbers, got {lambdas!r}")
            lambdas = None
        else:
            lambdas = [float(v) for v in lambdas]

        scalars: Dict[str, Any] = {}
        for key, default in (
            ("epsilon", SZEGO_EPSILON),
            ("gap_delta", GAP_DELTA),
            ("max_half_width", MAX_HALF_WIDTH),
        ):
            value = data.get(key, default)
            if key == "max_half_width" and value is None:
                scalars[key] = None
                continue
            if not _is_number(value):
                fail(key, f"expected a number, got {value!r}")
                value = default
            scalars[key] = float(value)

        descent = DescentOptions()
        if data.get("descent") is not None:
            spec = data["descent"]
            try:
                if not isinstance(spec, dict):
                    raise ValueError("expected a mapping")
                unknown = set(spec) - {"step0", "shrink", "tol", "max_iter"}
                if unknown:
                    raise ValueError(f"unknown keys {sorted(unknown)}")
                descent = DescentOptions(**spec)
            except (TypeError, ValueError) as e:
                fail("descent", str(e))

        grid = data.get("grid") or {}
        grid_rect: Tuple = ExperimentConfig.grid_rect
        grid_resolution: Tuple = ExperimentConfig.grid_resolution
        if not isinstance(grid, dict):
            fail("grid", "expected a mapping")
        else:
            re_range = _pair(grid.get("re", grid_rect[:2]), "grid.re", fail)
            im_range = _pair(grid.get("im", grid_rect[2:]), "grid.im", fail)
            if re_range and im_range:
                grid_rect = tuple(float(v) for v in (*re_range, *im_range))
            resolution = _pair(
                grid.get("resolution", grid_resolution), "grid.resolution", fail, kind=_is_int
            )
            if resolution:
                grid_resolution = resolution

        scan = data.get("scan") or {}
        scan_range: Tuple = ExperimentConfig.scan_range
        scan_points = ExperimentConfig.scan_points
        if not isinstance(scan, dict):
            fail("scan", "expected a mapping")
        else:
            pair = _pair(scan.get("re", scan_range), "scan.re", fail)
            if pair:
                scan_range = tuple(float(v) for v in pair)
            scan_points = scan.get("points", scan_points)
            if not _is_int(scan_points):
                fail("scan.points", f"expected an integer, got {scan_points!r}")
                scan_points = ExperimentConfig.scan_points

        output = data.get("output") or {}
        output_format, precision = "csv", DEFAULT_PRECISION
        if not isinstance(output, dict):
            fail("output", "expected a mapping")
        else:
            output_format = output.get("format", output_format)
            precision = output.get("precision", precision)
            if not _is_int(precision):
                fail("output.precision", f"expected an integer, got {precision!r}")
                precision = DEFAULT_PRECISION

        if symbol is None or problems:
            raise ConfigError(problems)

        config = ExperimentConfig(
            symbol=symbol,
            n_list=list(n_list),
            window_scale=window_scale,
            label=str(data.get("label", "experiment")),
            version=str(data.get("version", "1.0")),
            rank_one=rank_one,
            lambdas=lambdas,
            descent=descent,
            grid_rect=grid_rect,
            grid_resolution=grid_resolution,
            scan_range=scan_range,
            scan_points=scan_points,
            output_format=output_format,
            precision=precision,
            lines=lines,
            **scalars,
        )
        problems = config.validate()
        if problems:
            raise ConfigError(problems)
        return config

    @classmethod
    def load(cls, path: Path) -> "ExperimentConfig":
        """
        Load and validate an experiment YAML file.

        Raises:
            FileNotFoundError: If the file does not exist
            ConfigError: If the file cannot be parsed or fails validation
        """
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Experiment config not found: {path}")

        text = path.read_text(encoding="utf-8")
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as e:
            mark = getattr(e, "problem_mark", None)
            line = mark.line + 1 if mark is not None else None
            problem = getattr(e, "problem", None) or str(e)
            raise ConfigError([Diagnostic("<yaml>", problem, line)])

        config = cls.from_dict(data, _line_index(text))
        config.source = path
        return config

    def validate(self) -> List[Diagnostic]:
        """
        Validate the experiment settings.

        Returns:
            List of problems (empty if valid)
        """
        problems: List[Diagnostic] = []

        def fail(name: str, message: str) -> None:
            problems.append(self.diagnostic(name, message))

        if not self.n_list:
            fail("n_list", "must not be empty")
        if any(n < 0 for n in self.n_list):
            fail("n_list", f"entries must be non-negative, got {self.n_list}")
        if any(b <= a for a, b in zip(self.n_list, self.n_list[1:])):
            fail("n_list", f"must be strictly ascending, got {self.n_list}")
        if self.window_scale < 1:
            fail("window_scale", f"must be at least 1, got {self.window_scale}")
        if self.rank_one is not None and not self.rank_one.constant and self.n_list:
            if self.rank_one.p > self.window(self.n_list[0]):
                fail(
                    "operator.rank_one.psi",
                    f"psi has modes up to {self.rank_one.p}, "
                    f"beyond the window half-width {self.window(self.n_list[0])}",
                )

        if not 0 < self.epsilon < 1:
            fail("epsilon", f"must lie in (0, 1), got {self.epsilon}")
        if self.gap_delta < 0:
            fail("gap_delta", f"must be non-negative, got {self.gap_delta}")
        if self.max_half_width is not None and not self.max_half_width > 0:
            fail("max_half_width", f"must be positive, got {self.max_half_width}")

        re_min, re_max, im_min, im_max = self.grid_rect
        if not (re_min < re_max and im_min < im_max):
            fail("grid", f"degenerate rectangle {self.grid_rect}")
        if min(self.grid_resolution) < 2:
            fail("grid.resolution", f"must be at least 2x2, got {self.grid_resolution}")
        if not self.scan_range[0] < self.scan_range[1]:
            fail("scan.re", f"empty range {self.scan_range}")
        if self.scan_points < 3:
            fail("scan.points", f"must be at least 3, got {self.scan_points}")

        if self.output_format not in OUTPUT_FORMATS:
            fail("output.format", f"must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        if not MIN_PRECISION <= self.precision <= MAX_PRECISION:
            fail(
                "output.precision",
                f"must lie in [{MIN_PRECISION}, {MAX_PRECISION}], got {self.precision}",
            )
        return problems

    def diagnostic(self, name: str, message: str) -> Diagnostic:
        """A problem with field `name`, located in the source file when known."""
        return Diagnostic(name, message, _line_for(self.lines, name))

    def window(self, n: int) -> int:
        """Half-width of the truncation window used for the parameter `n`."""
        return self.window_scale * n

    def with_n(self, n: int) -> "ExperimentConfig":
        """A copy restricted to a single truncation parameter."""
        return replace(self, n_list=[int(n)])

    def resolved_lambdas(self) -> List[float]:
        """Explicit lambdas, or the discrete eigenvalues of the configured operator."""
        if self.lambdas is not None:
            return list(self.lambdas)
        if self.rank_one is None:
            return []
        return discrete_eigenvalues_rank_one(self.symbol, self.rank_one)

    def __repr__(self) -> str:
        pert = "none" if self.rank_one is None else repr(self.rank_one)
        return f"ExperimentConfig(label={self.label!r}, n_list={self.n_list}, rank_one={pert})"


def available_presets() -> Sequence[str]:
    """Names of the bundled experiment presets."""
    return sorted(p.stem for p in PRESET_DIR.glob("*.yaml"))


def load_preset(name: str) -> ExperimentConfig:
    """Load a bundled preset such as 'table1'."""
    path = PRESET_DIR / f"{name}.yaml"
    if not path.exists():
        raise FileNotFoundError(
            f"Unknown preset {name!r}; available: {', '.join(available_presets())}"
        )
    return ExperimentConfig.load(path)
