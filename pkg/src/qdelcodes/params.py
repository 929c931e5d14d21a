"""Code parameters and their resolution into fully derived pipeline plans.

``CodeParams`` is the user-facing configuration: mode, lengths, alphabet,
burst bound, provider, and optional overrides for the window/density
parameters (used to shrink everything to desk scale for exhaustive
verification).  ``resolve`` turns it into a ``PipelinePlan`` holding, per
sketch stage, every derived quantity: window families, packing widths, and
the power-of-two moduli sized to cover the widest packed sketch, so each
modular window sum can be peeled exactly.

All width formulas depend only on lengths and parameters, never on string
content; this keeps every packing decodable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

from . import coloring
from .bits import Interval
from .encoders import BlockEncoder, dense_encoder, qary_chunks, regular_encoder, run_length_bound
from .errors import ParameterError
from .locator import locator_modulus
from .sketches import COLORED, PROVIDERS, VERBATIM, burst_sketch_width, twodel_width, vt_width
from .windows import WindowFamily, build_windows, effective_stride
from .bits import burst_pattern, num_rows

MODE_TWODEL = "twodel"
MODE_BURST_BIN = "burst-bin"
MODE_BURST_Q = "burst-q"
MODES = (MODE_TWODEL, MODE_BURST_BIN, MODE_BURST_Q)


@dataclass(frozen=True)
class CodeParams:
    mode: str
    n: int                      # length of the first codeword segment
    q: int = 2
    t: int = 2                  # burst bound (fixed at 2 deletions for twodel)
    d: int = 7                  # regularity constant
    provider: str = VERBATIM
    w_max: int = coloring.W_MAX_DEFAULT
    lam: int = 2                # declared locator guarantee factor
    reg_window: Optional[int] = None    # override: regularity window
    rho: Optional[int] = None           # override: two-deletion window stride
    delta: Optional[int] = None         # override: density window
    delta_prime: Optional[int] = None   # override: locator window stride
    table_dir: Optional[str] = None     # colored-table cache directory


# ---------------------------------------------------------------------------
# per-stage derived parameters


@dataclass(frozen=True)
class TwodelStage:
    m: int
    q: int
    rows: int
    provider: str
    w_max: int
    table_dir: Optional[str]
    reg_window: int
    run_bound: int
    family: WindowFamily
    n1_width: int
    mod_g0: int
    mod_g1: int
    n2_width: int
    eta_width: int

    @property
    def widths(self) -> tuple[int, ...]:
        g0w = (self.mod_g0 - 1).bit_length()
        g1w = (self.mod_g1 - 1).bit_length()
        return (self.eta_width, g0w, g1w, self.n2_width, self.n2_width)

    @property
    def f_width(self) -> int:
        return sum(self.widths)


@dataclass(frozen=True)
class BinBurstStage:
    m: int
    t: int
    pattern: str
    delta: int
    lam: int
    family: WindowFamily
    loc_modulus: int
    nb_width: int

    @property
    def widths(self) -> tuple[int, ...]:
        return (3, (self.loc_modulus - 1).bit_length(), self.nb_width, self.nb_width)

    @property
    def f_width(self) -> int:
        return sum(self.widths)


@dataclass(frozen=True)
class QBurstStage:
    m: int
    q: int
    rows: int
    row_stage: BinBurstStage
    family: WindowFamily
    nbar_width: int

    @property
    def widths(self) -> tuple[int, ...]:
        return self.row_stage.widths + (self.nbar_width, self.nbar_width)

    @property
    def f_width(self) -> int:
        return sum(self.widths)


@dataclass(frozen=True)
class PipelinePlan:
    params: CodeParams
    message_len: int            # symbols (bits in burst-bin mode)
    m1: int
    m2: int
    m3: int
    stage1: object
    stage2: object
    enc1: BlockEncoder
    enc2: BlockEncoder
    pad2: int                   # zero symbols padding the stage-2 payload
    rep_len: int                # message length of the repetition tail
    rep_t: int                  # repetition code corrects this many deletions

    @property
    def mode(self) -> str:
        return self.params.mode


def _reg_window(m: int, p: CodeParams) -> int:
    # log2 floored once, matching the window-stride formula 3*d*floor(log2 m),
    # so the stride always covers a run + alternating + run span
    if p.reg_window is not None:
        return p.reg_window
    return p.d * max(1, int(math.log2(m))) if m > 1 else m + 1


def _density_window(m: int, p: CodeParams) -> int:
    if p.delta is not None:
        return p.delta
    return p.t * (1 << (p.t + 1)) * max(1, int(math.log2(m))) if m > 1 else m + 1


def _twodel_stage(m: int, p: CodeParams) -> TwodelStage:
    if m < 2:
        raise ParameterError("segment length %d too short to sketch" % m)
    rows = num_rows(p.q)
    window = _reg_window(m, p)
    run_bound = run_length_bound(m, window)
    rho = p.rho if p.rho is not None else 3 * p.d * max(1, int(math.log2(m)))
    stride = effective_stride(rho, m)
    family = build_windows(m, stride)
    if len(family) > 1 and stride < 3 * run_bound:
        raise ParameterError(
            "window stride %d below the case-interval bound 3*%d" % (stride, run_bound))
    try:
        eta_width = twodel_width(m, p.provider, p.w_max, p.table_dir)
        win_width = max(
            (rows - 1) * twodel_width(w.length, p.provider, p.w_max, p.table_dir)
            for w in family.windows)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    n1_width = (rows - 1) * vt_width(run_bound)
    return TwodelStage(
        m=m, q=p.q, rows=rows, provider=p.provider, w_max=p.w_max, table_dir=p.table_dir,
        reg_window=window, run_bound=run_bound, family=family,
        n1_width=n1_width, mod_g0=2 << n1_width, mod_g1=2 * m << n1_width,
        n2_width=win_width, eta_width=eta_width)


def _bin_burst_stage(m: int, p: CodeParams) -> BinBurstStage:
    if m < 2:
        raise ParameterError("segment length %d too short to sketch" % m)
    pattern = burst_pattern(p.t)
    delta = _density_window(m, p)
    if p.delta_prime is not None:
        if p.delta_prime < p.lam * (delta + p.t):
            raise ParameterError("window too small for locator")
        nominal = p.delta_prime
    else:
        nominal = p.lam * (delta + p.t)
    family = build_windows(m, effective_stride(nominal, m))
    nb_width = max(burst_sketch_width(w.length, p.t) for w in family.windows)
    return BinBurstStage(
        m=m, t=p.t, pattern=pattern, delta=delta, lam=p.lam, family=family,
        loc_modulus=locator_modulus(m, p.t), nb_width=nb_width)


def _q_burst_stage(m: int, p: CodeParams) -> QBurstStage:
    row_stage = _bin_burst_stage(m, p)
    rows = num_rows(p.q)
    family = build_windows(m, effective_stride(row_stage.delta, m))
    nbar_width = max(
        (rows - 1) * burst_sketch_width(w.length, p.t) for w in family.windows)
    return QBurstStage(m=m, q=p.q, rows=rows, row_stage=row_stage,
                       family=family, nbar_width=nbar_width)


# ---------------------------------------------------------------------------
# pipeline resolution


def _solve_block_len(need: int, make_encoder) -> tuple[int, BlockEncoder]:
    """Smallest output length whose block encoder fits ``need`` payload symbols."""
    m = max(need, 2)
    limit = 4 * need + 256
    while m <= limit:
        enc = make_encoder(m)
        if enc.capacity >= need:
            return m, enc
        m += 1
    raise ParameterError("no feasible segment length for %d payload symbols" % need)


def _validate_common(p: CodeParams) -> None:
    if p.mode not in MODES:
        raise ParameterError("unknown mode %r" % p.mode)
    if p.n < 2:
        raise ParameterError("segment length must be >= 2")
    if p.q < 2 or p.q % 2 != 0:
        raise ParameterError("even alphabet required")
    if p.mode == MODE_BURST_BIN and p.q != 2:
        raise ParameterError("binary burst mode requires q = 2")
    if p.t < 1:
        raise ParameterError("burst bound must be >= 1")
    if p.mode == MODE_TWODEL and p.t != 2:
        raise ParameterError("two-deletion mode fixes t = 2")
    if p.d < 1:
        raise ParameterError("regularity constant must be >= 1")
    if p.provider not in PROVIDERS:
        raise ParameterError("unknown provider %r" % p.provider)
    if p.lam < 1:
        raise ParameterError("locator guarantee factor must be >= 1")
    for name in ("reg_window", "rho", "delta", "delta_prime"):
        value = getattr(p, name)
        if value is not None and value < 1:
            raise ParameterError("%s override must be positive" % name)


def resolve(p: CodeParams) -> PipelinePlan:
    """Validate parameters and derive the full pipeline plan.

    Raises ParameterError naming the violated condition.
    """
    _validate_common(p)
    q = p.q
    if p.mode == MODE_TWODEL:
        stage1 = _twodel_stage(p.n, p)
        enc1 = regular_encoder(p.n, stage1.reg_window)
        need2 = len(qary_chunks(stage1.f_width, q))
        m2len, enc2 = _solve_block_len(
            need2, lambda m: regular_encoder(m, _reg_window(m, p)))
        stage2 = _twodel_stage(m2len, p)
        rep_t = 2
    elif p.mode == MODE_BURST_BIN:
        stage1 = _bin_burst_stage(p.n, p)
        enc1 = dense_encoder(p.n, stage1.pattern, stage1.delta)
        need2 = stage1.f_width
        m2len, enc2 = _solve_block_len(
            need2, lambda m: dense_encoder(m, stage1.pattern, _density_window(m, p)))
        stage2 = _bin_burst_stage(m2len, p)
        rep_t = p.t
    else:
        stage1 = _q_burst_stage(p.n, p)
        enc1 = dense_encoder(p.n, stage1.row_stage.pattern, stage1.row_stage.delta)
        need2 = len(qary_chunks(stage1.f_width, q))
        m2len, enc2 = _solve_block_len(
            need2,
            lambda m: dense_encoder(m, stage1.row_stage.pattern, _density_window(m, p)))
        stage2 = _q_burst_stage(m2len, p)
        rep_t = p.t
    pad2 = enc2.capacity - need2
    if p.mode == MODE_BURST_BIN:
        rep_len = stage2.f_width
    else:
        rep_len = len(qary_chunks(stage2.f_width, q))
    m1 = p.n
    m2 = m1 + m2len
    m3 = m2 + rep_len * (rep_t + 1)
    return PipelinePlan(
        params=p, message_len=enc1.capacity, m1=m1, m2=m2, m3=m3,
        stage1=stage1, stage2=stage2, enc1=enc1, enc2=enc2, pad2=pad2,
        rep_len=rep_len, rep_t=rep_t)


def validate_errors(p: CodeParams) -> list[str]:
    """Collect validation failures instead of raising (CLI-facing)."""
    try:
        resolve(p)
    except ParameterError as exc:
        return [str(exc)]
    return []
