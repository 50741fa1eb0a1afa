import pytest

from src.machine.vector_context import VectorContext
from src.models.enum.arith_kind import ArithKind
from src.models.enum.mem_kind import MemKind
from src.models.schemas.cycle_ledger import CycleLedger
from src.models.schemas.vector_config import VectorConfig
from src.utils.errors import ContractViolationError


@pytest.mark.parametrize("vlen,requested,granted", [(512, 100, 8), (4096, 3, 3), (1024, 0, 0)])
def test_set_vl(make_ctx, vlen, requested, granted):
    ctx = make_ctx(vlen, 2)
    assert ctx.set_vl(requested) == granted
    assert ctx.snapshot() == CycleLedger(total_cycles=1, scalar_instructions=1)


@pytest.mark.parametrize("vlen,lanes,vl,cycles", [(4096, 8, 64, 9), (512, 8, 0, 0), (512, 8, 5, 2)])
def test_vec_arith_cost(make_ctx, vlen, lanes, vl, cycles):
    ctx = make_ctx(vlen, lanes)
    assert ctx.vec_arith(ArithKind.ADD, vl) == cycles
    ledger = ctx.snapshot()
    assert ledger.total_cycles == cycles
    assert ledger.vector_instructions == (1 if vl else 0)
    assert ledger.vector_element_ops == vl


@pytest.mark.parametrize("kind,vl,cycles", [
    (MemKind.LOAD_UNIT, 16, 5),
    (MemKind.LOAD_STRIDED, 16, 9),
    (MemKind.STORE_UNIT, 0, 0),
    (MemKind.STORE_STRIDED, 3, 3),
])
def test_vec_mem_cost(make_ctx, kind, vl, cycles):
    assert make_ctx(1024, 4).vec_mem(kind, vl) == cycles


def test_strided_factor_override(make_ctx):
    ctx = make_ctx(1024, 4, strided_mem_factor=3, issue_overhead_cycles=0)
    assert ctx.vec_mem(MemKind.LOAD_STRIDED, 16) == 12


@pytest.mark.parametrize("vlen,lanes,vl,cycles", [(512, 8, 8, 5), (512, 1, 4, 5), (512, 4, 0, 0), (512, 2, 7, 6)])
def test_vec_reduce_cost(make_ctx, vlen, lanes, vl, cycles):
    assert make_ctx(vlen, lanes).vec_reduce(vl) == cycles


def test_scalar_op_additivity(ctx):
    assert ctx.scalar_op(0) == 0
    assert ctx.snapshot() == CycleLedger()
    ctx.scalar_op(3)
    ctx.scalar_op(4)
    assert ctx.snapshot() == CycleLedger(total_cycles=7, scalar_instructions=7)


def test_repeat_charges_identical_instructions(make_ctx):
    single, batched = make_ctx(1024, 4), make_ctx(1024, 4)
    for _ in range(5):
        single.vec_arith(ArithKind.MACC, 13)
    batched.vec_arith(ArithKind.MACC, 13, repeat=5)
    assert single.snapshot() == batched.snapshot()


@pytest.mark.parametrize("op", [
    lambda ctx: ctx.vec_arith(ArithKind.MUL, 9),
    lambda ctx: ctx.vec_mem(MemKind.LOAD_UNIT, 9),
    lambda ctx: ctx.vec_reduce(9),
    lambda ctx: ctx.vec_arith(ArithKind.MUL, -1),
    lambda ctx: ctx.vec_arith(ArithKind.MUL, 4, repeat=-1),
    lambda ctx: ctx.scalar_op(-2),
    lambda ctx: ctx.set_vl(-1),
])
def test_contract_violations(make_ctx, op):
    with pytest.raises(ContractViolationError):
        op(make_ctx(512, 2))


def test_snapshot_is_pure(make_ctx):
    ctx = make_ctx(512, 8)
    assert ctx.snapshot() == CycleLedger()
    ctx.vec_arith(ArithKind.SUB, 8)
    first, second = ctx.snapshot(), ctx.snapshot()
    assert first == second
    assert first.vector_instructions == 1


def test_phase_records_sub_ledger(ctx):
    ctx.scalar_op(2)
    with ctx.phase("work"):
        ctx.vec_arith(ArithKind.ADD, 4)
    with ctx.phase("work"):
        ctx.scalar_op(1)
    assert ctx.phases["work"] == CycleLedger(
        total_cycles=4, vector_instructions=1, scalar_instructions=1, vector_element_ops=4
    )
    assert ctx.snapshot().total_cycles == 6


def test_lane_monotonicity_for_fixed_trace():
    trace = [(ArithKind.ADD, 5), (ArithKind.MACC, 32), (ArithKind.MUL, 17), (ArithKind.SUB, 1)]
    previous = None
    for lanes in (1, 2, 4, 8, 16, 32):
        ctx = VectorContext(VectorConfig(vlen_bits=2048, lanes=lanes))
        for kind, vl in trace:
            ctx.vec_arith(kind, vl)
            ctx.vec_reduce(vl)
        total = ctx.snapshot().total_cycles
        if previous is not None:
            assert total <= previous
        previous = total
