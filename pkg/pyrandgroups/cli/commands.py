import csv

import click
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn
from rich.table import Table

from pyrandgroups.automata import (
    BAutomaton,
    as_rational,
    estimate_growth,
    is_lambda_large,
    language_counts,
    make_sign_automaton,
    language_reduced_lower_bound,
    language_word_lower_bound,
)
from pyrandgroups.blocks import (
    BlockAlphabet,
    LengthClass,
    associate_word,
    build_associated_set,
    pair_relators,
)
from pyrandgroups.order import (
    DEFAULT_CERTIFY_MAX_N,
    SignVector,
    certify_associated,
    certify_obstruction,
    certify_via_languages,
    compare_routes,
)
from pyrandgroups.sampler import DEFAULT_RELATOR_CAP, Presentation, SamplerConfig, sample_relator_set
from pyrandgroups.stats import (
    CSV_COLUMNS,
    ConcentrationExperiment,
    HitModelParams,
    IntersectionExperiment,
    distinctness_probability,
)
from pyrandgroups.words import Alphabet, Word
from .app import (
    EXIT_NO_CERTIFICATE,
    CliContext,
    CliError,
    console,
    load_json_artifact,
    main,
    write_artifact,
)
from .manifest import RunManifest


def parse_word(text: str) -> Word:
    try:
        return Word.from_text(text)
    except ValueError as error:
        raise CliError(f"Cannot parse word {text!r}: {error}") from error


def load_presentation(path: str) -> Presentation:
    artifact = load_json_artifact(path)
    if not isinstance(artifact, Presentation):
        raise CliError(f"{path} does not hold a presentation.")
    return artifact


def resolve_automaton(in_path: str | None, signs: str | None, index: int | None) -> BAutomaton:
    """An automaton from a JSON file, or A_{eps,i} from ``--sign`` and ``--index``."""
    if in_path is not None:
        artifact = load_json_artifact(in_path)
        if not isinstance(artifact, BAutomaton):
            raise CliError(f"{in_path} does not hold a b-automaton.")
        return artifact
    if signs is not None:
        return make_sign_automaton(SignVector.from_text(signs).signs, index or 1)
    raise CliError("Give an automaton with --in, or a sign automaton with --sign and --index.")


def automaton_options(command):
    command = click.option("--index", "index", type=click.IntRange(min=1), default=1, show_default=True)(command)
    command = click.option("--sign", "signs", default=None, help="Sign vector such as '+-' for A_{eps,i}.")(command)
    command = click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), default=None)(command)
    return command


def write_csv(path: str, rows: list[dict], fieldnames) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=list(fieldnames), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)


def write_csv_with_manifest(path: str, rows, fieldnames, state: CliContext, command: str, parameters, seed, inputs=()):
    write_csv(path, rows, fieldnames)
    manifest = RunManifest.for_run(command, parameters, seed, inputs=inputs, outputs=[path])
    manifest.write_next_to(path, state.json_indent)


def make_progress() -> Progress:
    return Progress(
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        console=console,
        transient=True,
    )


@main.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Number of generators.")
@click.option("--d", "d", type=float, required=True, help="Density, 0 < d < 1.")
@click.option("--L", "L", type=click.IntRange(min=1), required=True, help="Relator length.")
@click.option("--seed", type=click.IntRange(min=0), default=None, help="Overrides the global seed.")
@click.option("--count", type=click.IntRange(min=1), default=None, help="Relator count instead of b_L.")
@click.option("--cap", type=click.IntRange(min=1), default=DEFAULT_RELATOR_CAP, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Presentation JSON path.")
@click.pass_obj
def sample(state: CliContext, n, d, L, seed, count, cap, out):
    """Sample a random set of relators at density d."""
    seed = state.resolve_seed(seed)
    config = SamplerConfig(n=n, d=d, L=L, seed=seed, count_override=count, cap=cap)
    Alphabet(n).warn_if_degenerate("sample")
    presentation = sample_relator_set(config)
    parameters = {"n": n, "d": d, "L": L, "count": count, "cap": cap}
    write_artifact(presentation, out, state, "sample", parameters, seed)
    if out is not None:
        console.print(f"Sampled {len(presentation)} relators of length {L} over n={n}.")


@main.command()
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--emit-witnesses", type=click.Path(dir_okay=False), default=None)
@click.option("--route", type=click.Choice(["scan", "languages"]), default="scan", show_default=True)
@click.option("--B", "B", type=click.IntRange(min=1), default=None, help="Certify the presentation over blocks of length B.")
@click.option("--max-n", type=click.IntRange(min=1), default=DEFAULT_CERTIFY_MAX_N, show_default=True)
@click.option("--compare", is_flag=True, help="Report pairs only the relator scan certifies.")
@click.pass_context
def certify(ctx: click.Context, in_path, emit_witnesses, route, B, max_n, compare):
    """Search for a trivial-or-non-left-orderable certificate."""
    state: CliContext = ctx.obj
    presentation = load_presentation(in_path)
    if B is not None:
        outcome = certify_associated(presentation, B, max_n=max_n, threads=state.threads)
    elif route == "languages":
        outcome = certify_via_languages(presentation, max_n=max_n, threads=state.threads)
    else:
        outcome = certify_obstruction(presentation, max_n=max_n, threads=state.threads)

    if compare:
        comparison = compare_routes(presentation, max_n=max_n)
        console.print(f"Pairs certified by the relator scan only: {len(comparison.scan_only)}")

    if emit_witnesses is not None:
        parameters = {"route": route, "B": B, "max_n": max_n}
        write_artifact(outcome, emit_witnesses, state, "certify", parameters, inputs=[in_path])

    console.print(outcome.verdict)
    if outcome.certified:
        table = Table("eps", "i", "relator", "word")
        for signs, i, index, relator in outcome.certificate:
            table.add_row(signs.to_text(), str(i), str(index), relator.to_text())
        console.print(table)
        return
    signs, i = outcome.failing
    console.print(f"No positive relator for eps={signs.to_text()}, i={i}.")
    ctx.exit(EXIT_NO_CERTIFICATE)


@main.group()
def automaton():
    """Count, test and measure b-automata."""


@automaton.command("count")
@automaton_options
@click.option("--L", "L", type=click.IntRange(min=1), required=True, help="Largest length.")
def automaton_count(in_path, signs, index, L):
    """Exact language counts for lengths 1..L."""
    target = resolve_automaton(in_path, signs, index)
    words = language_counts(target, L)
    reduced = language_counts(target, L, reduced=True)
    table = Table("L", "words", "reduced")
    for length in range(1, L + 1):
        table.add_row(str(length), str(words[length - 1]), str(reduced[length - 1]))
    console.print(table)


@automaton.command("accepts")
@automaton_options
@click.option("--word", "word_text", required=True, help="Word such as 'a1 A2 a1'.")
def automaton_accepts(in_path, signs, index, word_text):
    """Test language membership."""
    target = resolve_automaton(in_path, signs, index)
    click.echo("true" if target.accepts(parse_word(word_text)) else "false")


@automaton.command("largeness")
@automaton_options
@click.option("--lambda", "lam", default="1/2", show_default=True)
@click.option("--L", "L", type=click.IntRange(min=1), default=None, help="Also print the count bounds at L.")
def automaton_largeness(in_path, signs, index, lam, L):
    """Check lambda-largeness."""
    target = resolve_automaton(in_path, signs, index)
    lam = as_rational(lam)
    click.echo("true" if is_lambda_large(target, lam) else "false")
    if L is not None:
        n = target.alphabet.n
        console.print(
            f"Bounds at L={L}: {language_word_lower_bound(lam, n, L)} words, {language_reduced_lower_bound(lam, n, L)} reduced."
        )


@automaton.command("growth")
@automaton_options
@click.option("--L-min", "L_min", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--L-max", "L_max", type=click.IntRange(min=2), required=True)
@click.option("--all-words", is_flag=True, help="Count all words instead of reduced ones.")
def automaton_growth(in_path, signs, index, L_min, L_max, all_words):
    """Growth rate k and density d' from exact counts."""
    target = resolve_automaton(in_path, signs, index)
    estimate = estimate_growth(target, L_min, L_max, reduced=not all_words)
    if estimate.degenerate:
        console.print("Growth 0: the language is empty at the largest lengths.")
        return
    console.print(f"k = {estimate.ratio} ({estimate.growth_rate_lower:.6f}), d' = {estimate.density_lower}")


@main.group()
def blocks():
    """Block alphabets and associated relators."""


@blocks.command("associate")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--B", "B", type=click.IntRange(min=1), required=True)
@click.option("--word", "word_text", required=True)
def blocks_associate(n, B, word_text):
    """The block word associated to a reduced word."""
    block_alphabet = BlockAlphabet(Alphabet(n), B)
    block_word = associate_word(parse_word(word_text), block_alphabet)
    click.echo(" ".join(str(letter) for letter in block_word))


@blocks.command("pair")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--B", "B", type=click.IntRange(min=2), required=True)
@click.option("--P", "P", type=click.IntRange(min=1), required=True)
@click.option("--r1", "r1_text", required=True)
@click.option("--r2", "r2_text", required=True)
def blocks_pair(n, B, P, r1_text, r2_text):
    """The block word r-hat(r1, r2), or 'absent'."""
    block_alphabet = BlockAlphabet(Alphabet(n), B)
    paired = pair_relators(parse_word(r1_text), parse_word(r2_text), block_alphabet, P)
    click.echo("absent" if paired is None else " ".join(str(letter) for letter in paired))


@blocks.command("build")
@click.option("--B", "B", type=click.IntRange(min=1), required=True)
@click.option("--P", "P", type=click.IntRange(min=0), default=None, help="Expected residue L mod B.")
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def blocks_build(state: CliContext, B, P, in_path, out):
    """Build the associated relator set R-hat."""
    presentation = load_presentation(in_path)
    if P is not None and presentation.L is not None:
        expected = LengthClass.of_length(presentation.L, B).P
        if expected != P:
            raise CliError(f"Relators of length {presentation.L} have residue {expected} mod {B}, not {P}.")
    block_alphabet = BlockAlphabet(Alphabet(presentation.n), B)
    associated = build_associated_set(presentation, block_alphabet, threads=state.threads)
    write_artifact(associated, out, state, "blocks build", {"B": B, "P": P}, inputs=[in_path])
    if out is not None:
        console.print(f"{len(associated)} associated relators over n_hat={block_alphabet.n_hat}.")


@main.group()
def stats():
    """Hit-model formulas and Monte Carlo experiments."""


def print_report_table(reports) -> None:
    table = Table(*CSV_COLUMNS)
    for report in reports:
        table.add_row(*(str(value) for value in report.to_row().values()))
    console.print(table)


@stats.command("concentration")
@click.option("--a", "a_L", type=click.IntRange(min=1), required=True)
@click.option("--b", "b_L", type=click.IntRange(min=1), required=True)
@click.option("--c", "c_L", type=click.IntRange(min=1), required=True)
@click.option("--epsilon", default="1/2", show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=10_000, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), default=None)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def stats_concentration(state: CliContext, a_L, b_L, c_L, epsilon, trials, seed, csv_path):
    """Simulate D_L and compare with the exact moments."""
    seed = state.resolve_seed(seed)
    params = HitModelParams(c_L, a_L, b_L, as_rational(epsilon))
    experiment = ConcentrationExperiment(params, trials, seed)
    with make_progress() as progress:
        task = progress.add_task("trials", total=trials)

        def advance(sender, completed, total):
            progress.update(task, completed=completed)

        experiment.events["trial_completed"].connect(advance, weak=False)
        report = experiment.run()
    print_report_table([report])
    console.print(f"empirical tail {report.empirical_tail}, all-distinct {report.empirical_distinct}")
    if csv_path is not None:
        parameters = {"a": a_L, "b": b_L, "c": c_L, "epsilon": str(params.epsilon), "trials": trials}
        write_csv_with_manifest(csv_path, [report.to_row()], CSV_COLUMNS, state, "stats concentration", parameters, seed)


DISTINCT_COLUMNS = ("b_L", "c_L", "q_exact", "q_bernoulli", "empirical_distinct")


@stats.command("distinct")
@click.option("--b", "b_L", type=click.IntRange(min=1), required=True)
@click.option("--c", "c_L", type=click.IntRange(min=1), required=True)
@click.option("--trials", type=click.IntRange(min=0), default=0, help="Also simulate this many trials.")
@click.option("--seed", type=click.IntRange(min=0), default=None)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def stats_distinct(state: CliContext, b_L, c_L, trials, seed, csv_path):
    """Probability that b draws from c objects are distinct."""
    seed = state.resolve_seed(seed)
    exact, bound = distinctness_probability(b_L, c_L)
    console.print(f"q exact {exact} ({float(exact):.6f}), Bernoulli bound {bound} ({float(bound):.6f})")
    row = {"b_L": b_L, "c_L": c_L, "q_exact": float(exact), "q_bernoulli": float(bound), "empirical_distinct": ""}
    if trials:
        report = ConcentrationExperiment(HitModelParams(c_L, 1, b_L), trials, seed).run()
        console.print(f"empirical all-distinct frequency {report.empirical_distinct:.6f}")
        row["empirical_distinct"] = report.empirical_distinct
    if csv_path is not None:
        parameters = {"b": b_L, "c": c_L, "trials": trials}
        write_csv_with_manifest(csv_path, [row], DISTINCT_COLUMNS, state, "stats distinct", parameters, seed)


@stats.command("intersect")
@automaton_options
@click.option("--d", "d", type=float, required=True)
@click.option("--L", "L_values", type=click.IntRange(min=1), multiple=True, required=True)
@click.option("--epsilon", default="1/2", show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=200, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), default=None)
@click.option("--cap", type=click.IntRange(min=1), default=DEFAULT_RELATOR_CAP, show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def stats_intersect(state: CliContext, in_path, signs, index, d, L_values, epsilon, trials, seed, cap, csv_path):
    """Random relator sets against the language of a fixed automaton."""
    seed = state.resolve_seed(seed)
    fixed_set = resolve_automaton(in_path, signs, index)
    experiment = IntersectionExperiment(
        fixed_set, d, L_values, trials, seed, as_rational(epsilon), cap, state.threads
    )
    with make_progress() as progress:
        task = progress.add_task("trials", total=trials * len(experiment.L_values))

        def advance(sender, **kwargs):
            progress.advance(task)

        experiment.events["trial_completed"].connect(advance, weak=False)
        reports = experiment.run()
    print_report_table(reports)
    if csv_path is not None:
        parameters = {
            "n": fixed_set.alphabet.n,
            "d": d,
            "L": list(experiment.L_values),
            "epsilon": str(as_rational(epsilon)),
            "trials": trials,
            "cap": cap,
            "fixed_set": fixed_set.to_dict(),
        }
        inputs = [in_path] if in_path else []
        rows = [report.to_row() for report in reports]
        write_csv_with_manifest(csv_path, rows, CSV_COLUMNS, state, "stats intersect", parameters, seed, inputs)
