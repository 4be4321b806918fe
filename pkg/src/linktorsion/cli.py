"""Command-line front end.

Subcommands:
  invariant    torsion of one link as a canonical numerator/denominator
  torres       verify the deletion/specialization identity for one link
  search-reps  enumerate representations over a prime field, write files
  batch        run the identity over a JSON table of links, with caching
  oracle       run the brute-force cross-check suites

Exit codes: 0 success/pass, 1 mismatch (a verified identity failed),
2 input error, 3 degenerate (no usable generator column).
"""

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

from . import __version__
from .algebra import Ring
from .diagram import braid_to_pd, delete_component, orient_and_sign, parse_pd, wirtinger
from .foxcalc import TensorEvaluator
from .oracles import run_suite
from .reps import (
    load_rep, rep_from_json, rep_to_json, ring_from_name, ring_name,
    save_rep, search_reps, trivial_rep, validate)
from .torsion import DegenerateError, report_to_json, torres_check, wada

EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_DEGENERATE = 3


# ---------------------------------------------------------------------------
# job assembly


def _parse_braid_word(text):
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise ValueError(
            "braid word must be comma-separated nonzero integers, e.g. '1,1,-2'")


def load_diagram(args):
    """Resolve the link source to (diagram, label, canonical PD text)."""
    if getattr(args, "pd", None) is not None:
        pd = parse_pd(args.pd)
        return orient_and_sign(pd), "pd:%s" % args.pd.strip(), str(pd)
    if getattr(args, "braid", None) is not None:
        if getattr(args, "strands", None) is None:
            raise ValueError("--braid requires --strands")
        pd = braid_to_pd(_parse_braid_word(args.braid), args.strands)
        label = "braid:%s/%d" % (args.braid.replace(" ", ""), args.strands)
        return orient_and_sign(pd), label, str(pd)
    raise ValueError("no link source given (use --pd or --braid)")


def parse_search_spec(text):
    """Parse 'n=2,p=5,sl,nonabelian,limit=10,kill=2' into options.

    `sl` restricts to determinant 1, `nonabelian` discards commuting
    images, `kill=<c>` forces the identity on 1-based component c,
    `limit` bounds the number of results (default: no bound).
    """
    out = {"n": None, "p": None, "sl": False, "nonabelian": False,
           "limit": None, "kill": None}
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok == "sl":
            out["sl"] = True
        elif tok == "nonabelian":
            out["nonabelian"] = True
        elif "=" in tok:
            key, _, value = tok.partition("=")
            if key not in ("n", "p", "limit", "kill"):
                raise ValueError("unknown search parameter %r" % key)
            try:
                out[key] = int(value)
            except ValueError:
                raise ValueError("search parameter %s needs an integer, got %r"
                                 % (key, value))
        else:
            raise ValueError("unknown search token %r" % tok)
    if out["n"] is None or out["p"] is None:
        raise ValueError("search spec needs n=<size> and p=<prime>")
    return out


def _run_search(spec, pres, default_limit=None):
    limit = spec["limit"] if spec["limit"] is not None else default_limit
    kill = None
    if spec["kill"] is not None:
        kill = spec["kill"] - 1
    return search_reps(pres, spec["n"], Ring("Fp", spec["p"]),
                       kill_component=kill, nonabelian=spec["nonabelian"],
                       special_linear=spec["sl"], limit=limit)


def resolve_reps(args, pres):
    """Resolve the representation source against a presentation.

    Returns [(label, Representation)]; the default is the trivial
    representation over --ring (default Q).
    """
    if getattr(args, "rep", None):
        rep = load_rep(args.rep)
        bad = validate(rep, pres)
        if bad:
            raise ValueError("representation file %s does not fit this link: %s"
                             % (args.rep, "; ".join(bad)))
        return [("file:%s" % os.path.basename(args.rep), rep)]
    if getattr(args, "search", None):
        spec = parse_search_spec(args.search)
        found = _run_search(spec, pres, default_limit=1)
        if not found:
            raise ValueError("representation search found nothing for %r"
                             % args.search)
        return [("search:%s#%d" % (args.search, i), r)
                for i, r in enumerate(found)]
    ring = ring_from_name(args.ring) if getattr(args, "ring", None) else Ring("Q")
    return [("trivial", trivial_rep(pres, ring))]


# ---------------------------------------------------------------------------
# cache: append-only JSONL keyed by a content digest


def digest_key(pd_text, component, rep):
    payload = {
        "pd": pd_text,
        "component": component,
        "ring": ring_name(rep.ring),
        "n": rep.n,
        "images": rep_to_json(rep)["images"],
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class Cache:
    """JSONL cache of verification reports, keyed by input digest.

    Each line is {key, version, generated_at, report}; only the digest
    identifies a record, so reruns from different checkouts hit.
    """

    def __init__(self, path):
        self.path = path
        self.records = {}
        if path and os.path.exists(path):
            with open(path) as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        rec = json.loads(line)
                    except json.JSONDecodeError:
                        continue  # tolerate a torn final line
                    if isinstance(rec, dict) and "key" in rec:
                        self.records[rec["key"]] = rec

    def get(self, key):
        return self.records.get(key)

    def put(self, key, report):
        rec = {
            "key": key,
            "version": __version__,
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "report": report,
        }
        self.records[key] = rec
        if self.path:
            with open(self.path, "a") as fh:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
        return rec


# ---------------------------------------------------------------------------
# subcommands


def cmd_invariant(args):
    d, label, _ = load_diagram(args)
    pres = wirtinger(d)
    for rep_label, rep in resolve_reps(args, pres):
        ev = TensorEvaluator.for_presentation(pres, rep)
        tv = wada(pres, ev)
        num, den = tv.normalized_pair()
        if args.format == "json":
            print(json.dumps({"link": label, "rep": rep_label,
                              "ring": ring_name(rep.ring), "n": rep.n,
                              "num": num, "den": den}, sort_keys=True))
        else:
            print("num: %s, den: %s" % (num, den))
    return EXIT_PASS


def _report_text(obj, rep_label):
    status = "PASS" if obj["pass"] else "FAIL"
    return "\n".join([
        "%s component %d over %s (n=%d) [%s]: %s %s" % (
            obj["link"], obj["component"], obj["ring"], obj["n"],
            rep_label, obj["case"], status),
        "  lhs     = (%s) / (%s)" % (obj["lhs_num"], obj["lhs_den"]),
        "  factor  = %s" % obj["rhs_factor"],
        "  sublink = (%s) / (%s)" % (obj["rhs_num"], obj["rhs_den"]),
    ])


def _pick_component(args, d):
    comp = d.num_components if getattr(args, "component", None) is None \
        else args.component
    if not 1 <= comp <= d.num_components:
        raise ValueError("component %r out of range 1..%d"
                         % (comp, d.num_components))
    return comp - 1


def cmd_torres(args):
    d, label, pd_text = load_diagram(args)
    if d.num_components < 2:
        raise ValueError("the identity needs at least 2 components")
    comp = _pick_component(args, d)
    sub_pres = wirtinger(delete_component(d, comp).sub_diagram)
    cache = Cache(args.cache) if args.cache else None
    ok = True
    for rep_label, rep in resolve_reps(args, sub_pres):
        key = digest_key(pd_text, comp + 1, rep)
        hit = cache.get(key) if cache else None
        if hit is not None:
            obj = hit["report"]
        else:
            obj = report_to_json(torres_check(d, comp, rep), link_name=label)
            if cache:
                cache.put(key, obj)
        ok = ok and obj["pass"]
        if args.format == "json":
            print(json.dumps(obj, sort_keys=True))
        else:
            print(_report_text(obj, rep_label))
    return EXIT_PASS if ok else EXIT_MISMATCH


def cmd_search_reps(args):
    d, label, _ = load_diagram(args)
    pres = wirtinger(d)
    spec = parse_search_spec(args.search)
    found = _run_search(spec, pres)
    os.makedirs(args.out, exist_ok=True)
    paths = []
    for i, rep in enumerate(found):
        path = os.path.join(args.out, "rep_%03d.json" % i)
        save_rep(path, rep)
        paths.append(path)
    if args.format == "json":
        print(json.dumps({"link": label, "count": len(found), "files": paths},
                         sort_keys=True))
    else:
        print("found %d representation(s); files in %s" % (len(found), args.out))
    return EXIT_PASS


def _batch_worker(job):
    """Verify one (link, representation) batch record; never raises."""
    try:
        d = orient_and_sign(parse_pd(job["pd"]))
        rep = rep_from_json(job["rep"])
        report = torres_check(d, job["component"] - 1, rep)
        return {"ok": True,
                "record": report_to_json(report, link_name=job["name"])}
    except DegenerateError as e:
        return {"ok": False, "kind": "degenerate", "error": str(e)}
    except (ValueError, AssertionError, KeyError) as e:
        return {"ok": False, "kind": "input", "error": str(e)}


def cmd_batch(args):
    with open(args.table) as fh:
        try:
            entries = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError("invalid JSON in %s: %s" % (args.table, e))
    if not isinstance(entries, list):
        raise ValueError("batch table must be a JSON array of records")

    cache = Cache(args.cache) if args.cache else None
    records = []   # (name, rep_label, outcome dict) in input order
    pending = []   # (slot index, worker job)
    hits = 0

    for idx, entry in enumerate(entries):
        name = entry.get("name", "entry%d" % idx) if isinstance(entry, dict) \
            else "entry%d" % idx
        try:
            if not isinstance(entry, dict) or "pd" not in entry:
                raise ValueError("record needs a 'pd' field")
            pd = parse_pd(entry["pd"])
            d = orient_and_sign(pd)
            if "components" in entry and entry["components"] != d.num_components:
                raise ValueError("expected %r components, diagram has %d"
                                 % (entry["components"], d.num_components))
            if d.num_components < 2:
                raise ValueError("the identity needs at least 2 components")
            comp = entry.get("component", d.num_components)
            if not isinstance(comp, int) or not 1 <= comp <= d.num_components:
                raise ValueError("component %r out of range" % (comp,))
            sub_pres = wirtinger(delete_component(d, comp - 1).sub_diagram)
            reps = resolve_reps(args, sub_pres)
        except ValueError as e:
            records.append((name, "-", {"ok": False, "kind": "input",
                                        "error": str(e)}))
            continue
        for rep_label, rep in reps:
            key = digest_key(str(pd), comp, rep)
            hit = cache.get(key) if cache else None
            if hit is not None:
                hits += 1
                records.append((name, rep_label,
                                {"ok": True, "record": hit["report"],
                                 "cached": True}))
                continue
            job = {"name": name, "pd": str(pd), "component": comp,
                   "rep": rep_to_json(rep), "key": key}
            records.append((name, rep_label, None))
            pending.append((len(records) - 1, job))

    if pending:
        jobs = [job for _, job in pending]
        if args.jobs and args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                outcomes = list(pool.map(_batch_worker, jobs))
        else:
            outcomes = [_batch_worker(job) for job in jobs]
        for (slot, job), outcome in zip(pending, outcomes):
            records[slot] = (records[slot][0], records[slot][1], outcome)
            if outcome["ok"] and cache:
                cache.put(job["key"], outcome["record"])

    counts = {"pass": 0, "fail": 0, "error": 0, "degenerate": 0}
    cases = {}
    for name, rep_label, outcome in records:
        if outcome["ok"]:
            rec = outcome["record"]
            counts["pass" if rec["pass"] else "fail"] += 1
            cases[rec["case"]] = cases.get(rec["case"], 0) + 1
            print(json.dumps(rec, sort_keys=True))
        else:
            counts["degenerate" if outcome["kind"] == "degenerate"
                   else "error"] += 1
            print(json.dumps({"link": name, "rep": rep_label,
                              "error": outcome["error"]}, sort_keys=True))
    summary = {"records": len(records), "cache_hits": hits,
               "cases": cases, **counts}
    if args.format == "json":
        print(json.dumps({"summary": summary}, sort_keys=True))
    else:
        print("summary: %d records; %d pass, %d fail, %d errors, "
              "%d degenerate, %d cache hits; cases: %s"
              % (len(records), counts["pass"], counts["fail"],
                 counts["error"], counts["degenerate"], hits,
                 " ".join("%s=%d" % kv for kv in sorted(cases.items())) or "-"))
    if counts["fail"]:
        return EXIT_MISMATCH
    if counts["error"]:
        return EXIT_INPUT
    if counts["degenerate"]:
        return EXIT_DEGENERATE
    return EXIT_PASS


def cmd_oracle(args):
    results = run_suite(args.suite)
    for res in results:
        print(res.summary())
    return EXIT_PASS if all(r.passed for r in results) else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# parser


def _add_link_source(sp):
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--pd", help="inline PD code, e.g. 'X[1,3,2,4] X[3,1,4,2]'")
    group.add_argument("--braid", help="comma-separated braid word, e.g. '1,1,1'")
    sp.add_argument("--strands", type=int, help="strand count for --braid")


def _add_rep_source(sp):
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--trivial", action="store_true",
                       help="trivial 1-dimensional representation (default)")
    group.add_argument("--rep", help="representation JSON file")
    group.add_argument("--search",
                       help="search spec, e.g. 'n=2,p=5,sl,nonabelian'")
    sp.add_argument("--ring", help="coefficient ring for --trivial: Z, Q or F<p>"
                    " (default Q)")


def _add_format(sp):
    sp.add_argument("--format", choices=("text", "json"), default="text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="linktorsion",
        description="Twisted Reidemeister torsion of links and the "
                    "deletion/specialization identity it satisfies.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("invariant", help="compute the torsion of a link")
    _add_link_source(sp)
    _add_rep_source(sp)
    _add_format(sp)
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("torres", help="verify the specialization identity")
    _add_link_source(sp)
    _add_rep_source(sp)
    sp.add_argument("--component", type=int,
                    help="1-based component to delete (default: last)")
    sp.add_argument("--cache", help="JSONL report cache path")
    _add_format(sp)
    sp.set_defaults(func=cmd_torres)

    sp = sub.add_parser("search-reps", help="enumerate representations")
    _add_link_source(sp)
    sp.add_argument("--search", required=True,
                    help="search spec, e.g. 'n=2,p=5,sl,nonabelian,limit=10'")
    sp.add_argument("--out", default="reps_out",
                    help="directory for representation files")
    _add_format(sp)
    sp.set_defaults(func=cmd_search_reps)

    sp = sub.add_parser("batch", help="verify a JSON table of links")
    sp.add_argument("table", help="JSON array of {name, pd, component?} records")
    _add_rep_source(sp)
    sp.add_argument("--cache", help="JSONL report cache path")
    sp.add_argument("--jobs", type=int, default=1,
                    help="parallel worker count")
    _add_format(sp)
    sp.set_defaults(func=cmd_batch)

    sp = sub.add_parser("oracle", help="run brute-force cross-check suites")
    sp.add_argument("suite", nargs="?", default="all",
                    choices=("det", "fox", "lk", "all"))
    sp.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegenerateError as e:
        print("degenerate: %s" % e, file=sys.stderr)
        return EXIT_DEGENERATE
    except (ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
