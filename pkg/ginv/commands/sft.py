import click

from ginv.abelianization import extension_data, strong_ah, tfg_abelianization
from ginv.classification import product_isomorphic, sft_morita
from ginv.commands.runner import Settings, emit, handler
from ginv.errors import ParseError
from ginv.homology import hk_check, product_homology, product_k_theory
from ginv.jobs import Command, JobSpec, Outcome
from ginv.sft import invariants


@handler(Command.VALIDATE)
def validate_job(job: JobSpec, factor_lists) -> Outcome:
    (factors,) = factor_lists
    sizes = [a.size for a in factors]
    return Outcome(
        payload={"valid": True, "factors": len(factors), "sizes": sizes},
        text=f"valid: {len(factors)} factor(s) of size {', '.join(map(str, sizes))}",
    )


@handler(Command.INVARIANTS)
def invariants_job(job: JobSpec, factor_lists) -> Outcome:
    (factors,) = factor_lists
    rows, lines = [], []
    for index, a in enumerate(factors):
        inv = invariants(a)
        rows.append({
            "factor": index,
            "bf": str(inv.bf),
            "unit": list(inv.unit.coords),
            "determinant": inv.determinant,
            "det_sign": inv.det_sign,
            "h0": str(inv.homology[0]),
            "h1": str(inv.homology[1]),
            "k0": str(inv.k0),
            "k1": str(inv.k1),
        })
        lines.append(
            f"factor {index}: BF(A^t) = {inv.bf}, u_A = {inv.unit.coords}, "
            f"det(id - A) = {inv.determinant}, H_1 = {inv.k1}"
        )
    return Outcome(payload={"factors": rows}, text="\n".join(lines))


@handler(Command.HOMOLOGY)
def homology_job(job: JobSpec, factor_lists) -> Outcome:
    (factors,) = factor_lists
    homology = product_homology(factors)
    degrees = {str(n): str(g) for n, g in homology.groups.items()}
    lines = [f"H_{n} = {g}" for n, g in degrees.items()]
    lines.append(f"unit class = {homology.unit_class.coords}")
    return Outcome(
        payload={"homology": degrees, "unit_class": list(homology.unit_class.coords)},
        text="\n".join(lines),
    )


@handler(Command.K_GROUPS)
def k_groups_job(job: JobSpec, factor_lists) -> Outcome:
    (factors,) = factor_lists
    k0, k1 = product_k_theory(factors)
    return Outcome(payload={"k0": str(k0), "k1": str(k1)}, text=f"K_0 = {k0}\nK_1 = {k1}")


@handler(Command.HK_CHECK)
def hk_check_job(job: JobSpec, factor_lists) -> Outcome:
    (factors,) = factor_lists
    report = hk_check(factors)
    text = (
        f"{'true' if report.holds else 'false'}\n"
        f"H_even = {report.h_even}, K_0 = {report.k0}\n"
        f"H_odd = {report.h_odd}, K_1 = {report.k1}"
    )
    payload = {
        "holds": report.holds,
        "h_even": str(report.h_even),
        "h_odd": str(report.h_odd),
        "k0": str(report.k0),
        "k1": str(report.k1),
    }
    return Outcome(payload=payload, text=text, verdict=report.holds)


@handler(Command.CLASSIFY)
def classify_job(job: JobSpec, factor_lists) -> Outcome:
    left, right = factor_lists
    verdict = product_isomorphic(left, right, aut_bound=job.aut_bound, tuple_bound=job.tuple_bound)
    if verdict.isomorphic and verdict.witness.is_identity:
        text = "isomorphic (identity witness)"
    elif verdict.isomorphic:
        images = "; ".join(
            ", ".join(str(list(x.coords)) for x in phi.images) or "-" for phi in verdict.witness.homs
        )
        text = f"isomorphic (permutation {list(verdict.witness.permutation)}, generator images {images})"
    else:
        text = f"not isomorphic: {verdict.reason}"
    return Outcome(payload=verdict.model_dump(mode="json"), text=text, verdict=verdict.isomorphic)


@handler(Command.MORITA)
def morita_job(job: JobSpec, factor_lists) -> Outcome:
    left, right = factor_lists
    if len(left) != 1 or len(right) != 1:
        raise ParseError("morita compares two single-factor inputs")
    equivalent = sft_morita(left[0], right[0])
    return Outcome(
        payload={"morita_equivalent": equivalent},
        text="Morita equivalent" if equivalent else "not Morita equivalent",
        verdict=equivalent,
    )


@handler(Command.ABELIANIZATION)
def abelianization_job(job: JobSpec, factor_lists) -> Outcome:
    (factors,) = factor_lists
    decomposition = "primary" if job.primary else "invariant"
    group = tfg_abelianization(factors, decomposition)
    data = extension_data(factors, decomposition)
    payload = {
        "abelianization": str(group),
        "split_part": str(data.split_part),
        "kernel": str(data.kernel_group),
        "class_components": [c.model_dump(mode="json") for c in data.class_components],
    }
    text = f"{group}\nsplit part = {data.split_part}\nS_0 (x) Z/2 = {data.kernel_group}"
    return Outcome(payload=payload, text=text)


@handler(Command.STRONG_AH)
def strong_ah_job(job: JobSpec, factor_lists) -> Outcome:
    (factors,) = factor_lists
    holds = strong_ah(factors)
    return Outcome(payload={"strong_ah": holds}, text="true" if holds else "false", verdict=holds)


source_argument = click.argument("source")


@click.command("validate")
@source_argument
@click.pass_obj
def validate_command(settings: Settings, source):
    """Check that every factor is an irreducible non-permutation matrix."""
    emit(settings, Command.VALIDATE, sources=[source])


@click.command("invariants")
@source_argument
@click.pass_obj
def invariants_command(settings: Settings, source):
    """Bowen-Franks group, unit class, determinant and H_1 of each factor."""
    emit(settings, Command.INVARIANTS, sources=[source])


@click.command("homology")
@source_argument
@click.pass_obj
def homology_command(settings: Settings, source):
    """Homology of the product groupoid."""
    emit(settings, Command.HOMOLOGY, sources=[source])


@click.command("k-groups")
@source_argument
@click.pass_obj
def k_groups_command(settings: Settings, source):
    emit(settings, Command.K_GROUPS, sources=[source])


@click.command("hk-check")
@source_argument
@click.pass_obj
def hk_check_command(settings: Settings, source):
    """Compare even/odd homology with K_0/K_1."""
    emit(settings, Command.HK_CHECK, sources=[source])


@click.command("classify")
@click.argument("left")
@click.argument("right")
@click.pass_obj
def classify_command(settings: Settings, left, right):
    """Decide isomorphism of two product groupoids."""
    emit(settings, Command.CLASSIFY, sources=[left, right])


@click.command("morita")
@click.argument("left")
@click.argument("right")
@click.pass_obj
def morita_command(settings: Settings, left, right):
    emit(settings, Command.MORITA, sources=[left, right])


@click.command("abelianization")
@source_argument
@click.option("--primary", is_flag=True, help="Use the prime-power decomposition of each H_0.")
@click.pass_obj
def abelianization_command(settings: Settings, source, primary):
    """Abelianization of the topological full group of the product."""
    emit(settings, Command.ABELIANIZATION, sources=[source], primary=primary)


@click.command("strong-ah")
@source_argument
@click.pass_obj
def strong_ah_command(settings: Settings, source):
    emit(settings, Command.STRONG_AH, sources=[source])


def get_commands():
    return [
        validate_command,
        invariants_command,
        homology_command,
        k_groups_command,
        hk_check_command,
        classify_command,
        morita_command,
        abelianization_command,
        strong_ah_command,
    ]
