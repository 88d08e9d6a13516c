import click

from ginv.commands.runner import Settings, emit, handler
from ginv.errors import ParseError
from ginv.jobs import Command, JobSpec, Outcome
from ginv.tables.element import compose, equal, inverse
from ginv.tables.generators import baker, baker_from_generators
from ginv.tables.relations import character_search, verify_relations
from ginv.utils import parse_arity


@handler(Command.RELATIONS_CHECK)
def relations_job(job: JobSpec, factor_lists) -> Outcome:
    report = verify_relations(job.arity, job.index_bound)
    total = sum(report.checked.values())
    if report.passed:
        text = f"all {total} relations hold (index bound {report.index_bound})"
    else:
        text = "\n".join(
            [f"{len(report.failures)} of {total} relations fail:"]
            + [f"  {f.family} {f.params}: {f.relation}" for f in report.failures]
        )
    return Outcome(payload=report.model_dump(mode="json"), text=text, verdict=report.passed)


@handler(Command.CHARACTER_SEARCH)
def character_job(job: JobSpec, factor_lists) -> Outcome:
    found = character_search(job.arity, job.target_order, index_bound=job.index_bound, tuple_bound=job.tuple_bound)
    lines = [
        f"x = {list(c.x)}, t = {c.t}" + (" (surjective)" if c.surjective else "")
        for c in found
    ]
    return Outcome(
        payload={"modulus": job.target_order, "assignments": [c.model_dump(mode="json") for c in found]},
        text="\n".join(lines) if lines else "no character",
    )


def baker_checks(arity) -> dict[str, bool]:
    """Identities satisfied by the baker's maps on coordinates of equal arity."""
    checks = {}
    pairs = [(d, e) for d in range(1, len(arity) + 1) for e in range(1, len(arity) + 1)
             if d != e and arity[d - 1] == arity[e - 1]]
    for d, e in pairs:
        b = baker(d, e, arity)
        checks[f"baker({d},{e}) = s_1,{d}^-1 s_1,{e}"] = equal(b, baker_from_generators(d, e, arity))
        checks[f"baker({d},{e}) inverse"] = equal(compose(b, inverse(b)), b.identity(arity))
    for d, e in pairs:
        for f in range(1, len(arity) + 1):
            if f not in (d, e) and arity[f - 1] == arity[d - 1]:
                checks[f"baker({d},{e}) baker({e},{f}) = baker({d},{f})"] = equal(
                    compose(baker(d, e, arity), baker(e, f, arity)), baker(d, f, arity)
                )
    return checks


@handler(Command.BAKER_CHECK)
def baker_job(job: JobSpec, factor_lists) -> Outcome:
    checks = baker_checks(job.arity)
    holds = bool(checks) and all(checks.values())
    lines = [f"{name}: {'ok' if ok else 'FAILED'}" for name, ok in checks.items()]
    if not checks:
        lines = ["no two coordinates share an arity"]
    return Outcome(payload={"holds": holds, "checks": checks}, text="\n".join(lines), verdict=holds)


def _arity(ctx, param, value):
    try:
        return parse_arity(value)
    except ParseError as e:
        raise click.BadParameter(str(e)) from e


arity_option = click.option("--arity", required=True, callback=_arity, help="Comma separated arities k(1),...,k(n).")


@click.command("relations-check")
@arity_option
@click.pass_obj
def relations_command(settings: Settings, arity):
    """Verify every defining relation of W_{n,k} on tables."""
    emit(settings, Command.RELATIONS_CHECK, arity=arity)


@click.command("character-search")
@arity_option
@click.option("--target-order", type=int, required=True)
@click.pass_obj
def character_command(settings: Settings, arity, target_order):
    """Homomorphisms W_{n,k} -> Z/m that are constant on s_{.,d} and on tau_."""
    emit(settings, Command.CHARACTER_SEARCH, arity=arity, target_order=target_order)


@click.command("baker-check")
@arity_option
@click.pass_obj
def baker_command(settings: Settings, arity):
    emit(settings, Command.BAKER_CHECK, arity=arity)


def get_commands():
    return [relations_command, character_command, baker_command]
