"""Command-line front end.

Exit codes: 0 success or a true/pass verdict, 1 a false/fail verdict,
2 usage or input errors, 3 a budget or instance cap stopped the run.
Human-readable output goes to stdout, diagnostics to stderr; the verify
subcommand emits one JSON report per line.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .errors import BudgetExceeded, CapExceeded, WordleKitError
from .feasibility import FeasibleSet, filter_feasible
from .model import (
    Dictionary,
    marking_to_digits,
    parse_dictionary,
    parse_marking,
    serialize_dictionary,
)
from .oracles import (
    VerificationReport,
    brute_force_decide,
    random_dictionary,
    sweep_dictionaries,
    sweep_set_families,
    verify_lemma1,
    verify_lemma3,
    verify_thm1,
    verify_thm2,
)
from .reductions import (
    asc_to_wordle,
    graph_to_wordle,
    parse_graph,
    set_family_from_json,
    set_family_to_json,
    setcover_to_asc,
)
from .solver import GuessMode, SolveOptions, Solver, StrategyTree
from .strategies import suggest_guess

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

GUESS_MODES = {"full": GuessMode.FULL_DICTIONARY, "feasible": GuessMode.FEASIBLE_ONLY}


def _load_dictionary(path: str, fmt: str) -> Dictionary:
    return parse_dictionary(Path(path).read_text(), fmt=fmt)


def _solve_options(args) -> SolveOptions:
    return SolveOptions(
        guess_mode=GUESS_MODES[args.guess_mode],
        node_budget=args.budget,
    )


def _tree_to_obj(tree: StrategyTree, d: Dictionary):
    children = {}
    for m, child in tree.children.items():
        children[marking_to_digits(m)] = None if child is None else _tree_to_obj(child, d)
    return {"guess": d.alphabet.word_text(tree.guess), "children": children}


def _add_dict_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dict", required=True, help="dictionary file, one word per line")
    p.add_argument(
        "--format",
        choices=("chars", "tokens"),
        default="chars",
        help="word encoding: one symbol per character, or comma-separated",
    )


def _add_solver_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--guess-mode",
        choices=tuple(GUESS_MODES),
        default="full",
        help="draw guesses from the whole dictionary or only feasible words",
    )
    p.add_argument("--budget", type=int, default=None, help="node expansion limit")


def cmd_solve(args) -> int:
    d = _load_dictionary(args.dict, args.format)
    solver = Solver(d, _solve_options(args))
    answer = solver.decide(args.max_guesses)
    stats = solver.last_stats
    print(
        f"nodes={stats.nodes} memo_hits={stats.memo_hits} "
        f"elapsed={stats.elapsed:.3f}s",
        file=sys.stderr,
    )
    print("YES" if answer else "NO")
    if args.emit_strategy and answer:
        tree = solver.strategy_tree(args.max_guesses)
        Path(args.emit_strategy).write_text(
            json.dumps(_tree_to_obj(tree, d), indent=2) + "\n"
        )
    return EXIT_TRUE if answer else EXIT_FALSE


def cmd_wmin(args) -> int:
    d = _load_dictionary(args.dict, args.format)
    solver = Solver(d, _solve_options(args))
    value = solver.w_min()
    stats = solver.last_stats
    print(
        f"nodes={stats.nodes} memo_hits={stats.memo_hits} "
        f"elapsed={stats.elapsed:.3f}s",
        file=sys.stderr,
    )
    print(value)
    return EXIT_TRUE


def _write_sidecar(out: str, meta: dict) -> None:
    Path(f"{out}.meta.json").write_text(json.dumps(meta, indent=2) + "\n")


def cmd_gen(args) -> int:
    if args.construction == "asc-from-setcover":
        family = set_family_from_json(Path(args.input).read_text())
        doubled = setcover_to_asc(family)
        Path(args.output).write_text(set_family_to_json(doubled) + "\n")
        _write_sidecar(
            args.output,
            {
                "construction": "asc-from-setcover",
                "source": str(args.input),
                "universe": doubled.universe,
                "sets": len(doubled.sets),
            },
        )
    elif args.construction == "wordle-from-asc":
        if args.c is None:
            print("wordle-from-asc requires -c", file=sys.stderr)
            return EXIT_USAGE
        family = set_family_from_json(Path(args.input).read_text())
        d, budget = asc_to_wordle(family, args.c)
        Path(args.output).write_text(serialize_dictionary(d, fmt="tokens"))
        _write_sidecar(
            args.output,
            {
                "construction": "wordle-from-asc",
                "source": str(args.input),
                "c": args.c,
                "max_guesses": budget,
                "k": d.k,
                "sigma": d.sigma,
                "words": len(d),
            },
        )
    else:
        graph = parse_graph(Path(args.input).read_text())
        d = graph_to_wordle(graph)
        Path(args.output).write_text(serialize_dictionary(d, fmt="tokens"))
        _write_sidecar(
            args.output,
            {
                "construction": "wordle-from-graph",
                "source": str(args.input),
                "vertices": graph.n,
                "k": d.k,
                "sigma": d.sigma,
                "words": len(d),
            },
        )
    return EXIT_TRUE


def _emit(report: VerificationReport) -> bool:
    print(report.to_json())
    return report.passed


def cmd_verify(args) -> int:
    ok = True
    if args.claim == "thm1":
        if args.sweep:
            for family in sweep_set_families(args.max_n, args.max_sets):
                for c in (1, 2):
                    ok &= _emit(verify_thm1(family, c))
        else:
            family = set_family_from_json(Path(args.family).read_text())
            ok &= _emit(verify_thm1(family, args.c))
    elif args.claim == "lemma1":
        if args.sweep:
            for family in sweep_set_families(args.max_n, args.max_sets):
                for c in (1, 2):
                    ok &= _emit(verify_lemma1(family, c))
        else:
            family = set_family_from_json(Path(args.family).read_text())
            ok &= _emit(verify_lemma1(family, args.c))
    elif args.claim == "thm2":
        graph = parse_graph(Path(args.graph).read_text())
        override = (
            _load_dictionary(args.dict, args.format) if args.dict else None
        )
        ok &= _emit(verify_thm2(graph, dictionary=override))
    elif args.claim == "lemma3":
        if args.sweep:
            rng = random.Random(args.seed)
            for _ in range(args.count):
                d = random_dictionary(
                    rng, rng.randint(1, 6), rng.randint(1, 5), rng.randint(1, 200)
                )
                ok &= _emit(verify_lemma3(d))
        else:
            ok &= _emit(verify_lemma3(_load_dictionary(args.dict, args.format)))
    else:
        ok &= _emit(_solver_oracle_report(args))
    return EXIT_TRUE if ok else EXIT_FALSE


def _solver_oracle_report(args) -> VerificationReport:
    """One aggregate report over the exhaustive sweep plus random instances."""
    import time

    t0 = time.perf_counter()
    comparisons = 0
    mismatches = 0
    witness = None

    def compare(d: Dictionary, l: int, mode: GuessMode):
        nonlocal comparisons, mismatches, witness
        a = Solver(d, SolveOptions(guess_mode=mode)).decide(l)
        b = brute_force_decide(d, l, mode)
        comparisons += 1
        if a != b and witness is None:
            mismatches += 1
            witness = json.dumps(
                {
                    "words": [d.alphabet.word_text(w) for w in d.words],
                    "max_guesses": l,
                    "guess_mode": mode.value,
                    "solver": a,
                    "oracle": b,
                }
            )

    instances = 0
    for d in sweep_dictionaries(sigma=3, max_k=2, max_words=6):
        instances += 1
        for mode in GuessMode:
            for l in range(3):
                compare(d, l, mode)
    rng = random.Random(args.seed)
    for i in range(args.count):
        instances += 1
        d = random_dictionary(
            rng, rng.randint(2, 4), rng.randint(2, 4), rng.randint(7, 12)
        )
        compare(d, rng.randint(1, 3), list(GuessMode)[i % 2])
    return VerificationReport(
        claim="memoized-search-matches-plain-recursion",
        instance=f"exhaustive sigma<=3 k<=2 words<=6 plus {args.count} random",
        values={
            "instances": instances,
            "comparisons": comparisons,
            "mismatches": mismatches,
        },
        passed=mismatches == 0,
        elapsed=time.perf_counter() - t0,
        witness=witness,
    )


def cmd_assist(args) -> int:
    d = _load_dictionary(args.dict, args.format)
    history = []
    print(
        f"loaded {len(d)} words, length {d.k}; "
        'enter "GUESS DIGITS" per line (digits: 0 gray, 1 yellow, 2 green)',
        file=sys.stderr,
    )
    for line in sys.stdin:
        line = line.strip()
        if not line or line.lower() in ("q", "quit", "exit"):
            break
        parts = line.split()
        if len(parts) != 2:
            print(f"expected GUESS and DIGITS, got {line!r}", file=sys.stderr)
            return EXIT_USAGE
        guess_text, digits = parts
        try:
            guess = d.alphabet.encode_guess(guess_text)
            m = parse_marking(digits, d.k)
        except WordleKitError as e:
            print(str(e), file=sys.stderr)
            return EXIT_USAGE
        history.append((guess, m))
        f = filter_feasible(d, history)
        print(f"feasible: {f.count}")
        if f.is_empty:
            print("no word matches this feedback; check the entries", file=sys.stderr)
            return EXIT_FALSE
        if f.count <= args.show_limit:
            print("words: " + " ".join(f.word_texts()))
        word, mode = suggest_guess(d, f, exact_threshold=args.exact_threshold)
        print(f"suggest: {d.alphabet.word_text(word)} ({mode})")
    return EXIT_TRUE


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(dict_dir=args.dict_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordlekit",
        description="Exact solver, strategies, and instance generators "
        "for Wordle-style guessing games",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide if every secret falls within a guess budget")
    _add_dict_args(p)
    p.add_argument("--max-guesses", type=int, required=True)
    _add_solver_args(p)
    p.add_argument("--emit-strategy", help="write the winning strategy as JSON")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("wmin", help="smallest winning guess budget")
    _add_dict_args(p)
    _add_solver_args(p)
    p.set_defaults(fn=cmd_wmin)

    p = sub.add_parser("gen", help="generate instances via the gadget constructions")
    p.add_argument(
        "construction",
        choices=("asc-from-setcover", "wordle-from-asc", "wordle-from-graph"),
    )
    p.add_argument("--in", dest="input", required=True, help="source instance file")
    p.add_argument("--out", dest="output", required=True, help="output path")
    p.add_argument("-c", type=int, default=None, help="cover budget")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("verify", help="check a claim on instances, JSON line per report")
    p.add_argument(
        "claim", choices=("thm1", "thm2", "lemma1", "lemma3", "solver-oracle")
    )
    p.add_argument("--family", help="set-family JSON file")
    p.add_argument("-c", type=int, default=1, help="cover budget")
    p.add_argument("--graph", help="graph file")
    p.add_argument("--dict", help="dictionary file")
    p.add_argument("--format", choices=("chars", "tokens"), default="tokens")
    p.add_argument("--sweep", action="store_true", help="run the built-in instance sweep")
    p.add_argument("--max-n", type=int, default=4, help="sweep: largest universe")
    p.add_argument("--max-sets", type=int, default=3, help="sweep: largest family")
    p.add_argument("--count", type=int, default=None, help="sweep: random instances")
    p.add_argument("--seed", type=int, default=2024, help="sweep: random seed")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("assist", help="interactive feasibility tracker and suggester")
    _add_dict_args(p)
    p.add_argument(
        "--exact-threshold",
        type=int,
        default=64,
        help="use exact search once this few words remain",
    )
    p.add_argument(
        "--show-limit",
        type=int,
        default=16,
        help="list the feasible words when at most this many remain",
    )
    p.set_defaults(fn=cmd_assist)

    p = sub.add_parser("serve", help="run the local assistant HTTP service")
    p.add_argument("--port", type=int, default=8717)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--dict-dir", required=True, help="directory of .dict files")
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        needs_input = not args.sweep and args.claim in ("thm1", "lemma1", "lemma3")
        if args.claim in ("thm1", "lemma1") and needs_input and not args.family:
            parser.error(f"verify {args.claim} needs --family or --sweep")
        if args.claim == "lemma3" and needs_input and not args.dict:
            parser.error("verify lemma3 needs --dict or --sweep")
        if args.claim == "thm2" and not args.graph:
            parser.error("verify thm2 needs --graph")
        if args.count is None:
            args.count = 200 if args.claim == "lemma3" else 100
    try:
        return args.fn(args)
    except (BudgetExceeded, CapExceeded) as e:
        print(str(e), file=sys.stderr)
        return EXIT_BUDGET
    except (WordleKitError, ValueError, OSError, json.JSONDecodeError, KeyError) as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())
