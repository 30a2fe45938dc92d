"""Command line front end: ``triad <verb> [operands] [--json] [--rank N] ...``.

Exit status is 0 on success, 1 when the inputs are well formed but outside
an operation's domain, and 2 on a syntax error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable

from . import grammar as g
from . import ideals, infinity, iso, lie, poly_module, weyl
from . import ordinal as o
from .config import Config
from .errors import DomainError, GrammarError, TriadError
from .lie import Element
from .polynomial import mono_str


Result = tuple[str, object]


def _lift(elems: list[Element], rank: int | None) -> list[Element]:
    """Put elements into a common u_n; --rank can only raise the rank."""
    n = max([e.rank for e in elems] + [rank or 2])
    return [e.with_rank(n) for e in elems]


def _elements(texts: list[str], cfg: Config) -> list[Element]:
    return _lift([g.parse_element(t) for t in texts], cfg.rank)


def _el_json(u: Element) -> dict:
    return {"rank": u.rank, "text": str(u),
            "terms": [{"alpha": list(b.alpha), "slot": b.slot, "coeff": str(c)} for b, c in u.sorted_terms()]}


def _bool(b: bool) -> str:
    return "true" if b else "false"


# ---------------------------------------------------------------------------
# verbs


def cmd_bracket(a, cfg) -> Result:
    u, v = _elements([a.u, a.v], cfg)
    w = lie.bracket(u, v)
    return str(w), _el_json(w)


def cmd_ord(a, cfg) -> Result:
    (u,) = _elements([a.u], cfg)
    lam = lie.ord_element(u)
    return str(lam), {"ordinal": o.to_json(lam), "text": str(lam)}


def cmd_act(a, cfg) -> Result:
    (u,) = _elements([a.u], cfg)
    p = g.parse_polynomial(a.p)
    u = _lift([u], max(cfg.rank or 2, p.nvars()))[0]
    q = lie.act(u, p)
    return str(q), {"text": str(q)}


def cmd_exp_ad(a, cfg) -> Result:
    x, v = _elements([a.a, a.v], cfg)
    w = lie.exp_ad(x, v, cfg.cap)
    return str(w), _el_json(w)


def cmd_closure(a, cfg) -> Result:
    gens = _elements(a.gens, cfg)
    sub = lie.subalgebra_closure(gens, cfg.cap)
    basis = [str(b) for b in sub.basis]
    text = f"dimension: {sub.dimension}\nclass: {sub.nilpotency_class}\nbasis: " + "; ".join(basis)
    return text, {"dimension": sub.dimension, "class": sub.nilpotency_class, "basis": basis}


def cmd_ideal_gen(a, cfg) -> Result:
    h = ideals.generated_ideal(_elements(a.gens, cfg))
    return str(h), h.to_json()


def cmd_ideal_member(a, cfg) -> Result:
    h = g.parse_handle(a.ideal)
    u = g.parse_element(a.u, max(h.rank, cfg.rank or 2))
    if u.rank != h.rank:
        raise DomainError(f"element needs u{u.rank} but the ideal lives in u{h.rank}")
    ans = ideals.membership(u, h)
    return _bool(ans), {"member": ans}


def cmd_ideal_basis(a, cfg) -> Result:
    h = g.parse_handle(a.ideal)
    bp = ideals.basis_prefix(h, a.limit)
    vecs = [str(b) for b in bp.vectors]
    size = f"finite, dimension {bp.dimension}" if bp.finite else "infinite"
    return "basis: " + ", ".join(vecs) + f"\n{size}", {"basis": vecs, "finite": bp.finite, "dimension": bp.dimension}


def cmd_centralizer(a, cfg) -> Result:
    if a.ideal.isdigit():
        hs = ideals.centralizer_set(int(a.ideal))
        return "\n".join(map(str, hs)), {"centralizers": [h.to_json() for h in hs]}
    c = ideals.centralizer(g.parse_handle(a.ideal))
    return str(c), c.to_json()


def cmd_series(a, cfg) -> Result:
    n = a.n
    if a.kind == "derived":
        hs = ideals.derived_series(n)
        return "\n".join(map(str, hs)), {"series": [h.to_json() for h in hs]}
    if a.kind == "lower":
        s = ideals.lower_central_series(n)
        text = f"{s.first}\n{s.stable} (stable from step {s.stabilizes_at})"
        return text, {"first": s.first.to_json(), "stable": s.stable.to_json(), "stabilizes_at": s.stabilizes_at}
    if a.kind == "central":
        if a.lam is None:
            raise DomainError("central needs an ordinal index")
        h = ideals.central_series_term(n, g.parse_ordinal(a.lam))
        return str(h), h.to_json()
    raise DomainError(f"unknown series {a.kind!r}")


def _sig_json(sig) -> dict:
    if isinstance(sig, iso.Residue):
        return {"variant": "Residue", "s": sig.s, "nu": o.to_json(sig.nu)}
    return {"variant": "FiniteDim", "d": sig.d}


def cmd_iso(a, cfg) -> Result:
    h1, h2 = g.parse_handle(a.f1), g.parse_handle(a.f2)
    s1, s2 = iso.canonical_signature(h1), iso.canonical_signature(h2)
    same = s1 == s2
    detail = f"signature: {s1}" if same else f"signatures: {s1} vs {s2}"
    return f"isomorphic: {_bool(same)}\n{detail}", {"isomorphic": same, "signatures": [_sig_json(s1), _sig_json(s2)]}


def cmd_udim(a, cfg) -> Result:
    if a.factor.strip() in ("uoo", "u_oo", "oo"):
        d = infinity.udim_inf()
    else:
        d = iso.udim_factor(g.parse_handle(a.factor))
    return str(d), {"udim": o.to_json(d), "text": str(d)}


def cmd_f_map(a, cfg) -> Result:
    (u,) = _elements([a.u], cfg)
    v = iso.f_power(u, a.times)
    k = iso.f_power_kernel(u.rank, a.times)
    return f"{v}\nkernel: {k}", {"image": _el_json(v), "kernel": k.to_json()}


def _weyls(texts: list[str], cfg: Config) -> list[weyl.WeylElement]:
    ws = [g.parse_weyl(t) for t in texts]
    n = max([w.rank for w in ws] + [cfg.rank or 1])
    return [weyl.WeylElement(w.terms, n) for w in ws]


def _weyl_json(w: weyl.WeylElement) -> list:
    return [{"alpha": list(x), "beta": list(d), "coeff": str(c)} for (x, d), c in sorted(w.terms.items())]


def cmd_weyl_mul(a, cfg) -> Result:
    x, y = _weyls([a.a, a.b], cfg)
    w = weyl.weyl_mul(x, y)
    return str(w), {"text": str(w), "terms": _weyl_json(w)}


def cmd_weyl_in_image(a, cfg) -> Result:
    (w,) = _weyls([a.a], cfg)
    ans = weyl.in_Wn_span(w)
    text = f"in image: {_bool(ans)}"
    data: dict = {"in_image": ans}
    if a.express:
        coords = weyl.express_in_Wprime(w, cfg.window)
        if coords is weyl.NOT_IN_SPAN:
            text += "\nW': not in span"
            data["wprime"] = None
        else:
            parts = [f"{c} * [{lbl}]" for lbl, c in coords.items()]
            text += "\nW': " + " + ".join(parts)
            data["wprime"] = {str(lbl): str(c) for lbl, c in coords.items()}
    return text, data


def cmd_weyl_kernel_check(a, cfg) -> Result:
    u, v = _elements([a.u, a.v], cfg)
    if len(u) != 1 or len(v) != 1:
        raise DomainError("kernel check takes two basis vectors")
    (bu, _), (bv, _) = next(iter(u)), next(iter(v))
    ok = weyl.kernel_generator_check(bu.alpha, bu.slot, bv.alpha, bv.slot, u.rank)
    n = u.rank
    lhs = weyl.weyl_mul(weyl.chi(Element.basis(bu.alpha, bu.slot, n)), weyl.chi(Element.basis(bv.alpha, bv.slot, n)))
    return f"{_bool(ok)}\nproduct: {lhs}", {"holds": ok, "product": str(lhs)}


def cmd_mod_ord(a, cfg) -> Result:
    p = g.parse_polynomial(a.p)
    n = max(p.nvars(), cfg.rank or 1)
    lam = poly_module.ord_polynomial(p, n)
    return str(lam), {"ordinal": o.to_json(lam), "text": str(lam)}


def cmd_mod_prime(a, cfg) -> Result:
    h = g.parse_submodule(a.sub)
    thetas, dim = poly_module.p_prime(h)
    wit, nxt = poly_module.p_doubleprime(h)
    th = [mono_str(t) or "1" for t in thetas]
    text = f"P': {', '.join(th)} (dim {dim})\nP'': {mono_str(wit) or '1'} -> {nxt}"
    return text, {"thetas": th, "prime_dim": dim, "witness": mono_str(wit) or "1", "next": nxt.to_json()}


def cmd_mod_ann(a, cfg) -> Result:
    h = poly_module.annihilator_submodule(g.parse_submodule(a.sub))
    return str(h), h.to_json()


def cmd_endo(a, cfg) -> Result:
    try:
        coeffs = tuple(Fraction(c) for c in a.coeffs.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise GrammarError(f"bad coefficient list {a.coeffs!r}", a.coeffs, 0) from exc
    p = g.parse_polynomial(a.p)
    n = cfg.rank or max(p.nvars(), 1)
    phi = poly_module.SeriesEndo(coeffs, n)
    img = poly_module.endo_apply(phi, p)
    ker = poly_module.endo_kernel(phi)
    return f"{img}\nkernel: {ker} (d={ker.d})", {"image": str(img), "d": ker.d, "kernel": str(ker)}


def _inf_arg(text: str) -> infinity.InfIdeal:
    try:
        return g.parse_inf_ideal(text)
    except GrammarError:
        return infinity.classify_generated(g.parse_element(text))


def cmd_inf_classify(a, cfg) -> Result:
    ideal = _inf_arg(a.x)
    op, cl = infinity.classify_closed_open(ideal)
    return f"{ideal}\nopen: {_bool(op)}, closed: {_bool(cl)}", {"ideal": str(ideal), "open": op, "closed": cl}


def cmd_inf_iso(a, cfg) -> Result:
    ans = infinity.iso_factors_inf(_inf_arg(a.i), _inf_arg(a.j))
    return f"isomorphic: {_bool(ans)}", {"isomorphic": ans}


def cmd_inf_witness(a, cfg) -> Result:
    (u,) = _elements([a.a], cfg)
    pe = infinity.PrefixElement.from_element(u)
    depth = a.depth
    steps = infinity.non_nilpotence_witness(pe, a.steps, depth)
    lines = [f"step {i}: {s}" for i, s in enumerate(steps, start=1)]
    return "\n".join(lines), {"steps": [s.to_json() for s in steps]}


# ---------------------------------------------------------------------------
# wiring


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--rank", type=int, help="ambient rank (may only raise the inferred one)")
    p.add_argument("--window", type=int, help="degree window for windowed computations")
    p.add_argument("--cap", type=int, help="iteration cap for closure-type loops")
    p.add_argument("--seed", type=int, help="seed for randomized helpers")
    p.add_argument("--config", help="JSON file with defaults for the flags above")
    return p


VERBS: dict[str, tuple[Callable, Callable[[argparse.ArgumentParser], None], str]] = {}


def _verb(name: str, help_: str):
    def deco(setup):
        def wrap(fn):
            VERBS[name] = (fn, setup, help_)
            return fn
        return wrap
    return deco


def _setup(*operands):
    def setup(p):
        for arg in operands:
            if isinstance(arg, tuple):
                p.add_argument(*arg[0], **arg[1])
            else:
                p.add_argument(arg)
    return setup


_verb("bracket", "Lie bracket [u, v]")(_setup("u", "v"))(cmd_bracket)
_verb("ord", "ordinal degree of an element")(_setup("u"))(cmd_ord)
_verb("act", "apply a derivation to a polynomial")(_setup("u", "p"))(cmd_act)
_verb("exp-ad", "e^{ad a}(v)")(_setup("a", "v"))(cmd_exp_ad)
_verb("closure", "Lie subalgebra generated by elements")(_setup((("gens",), {"nargs": "+"})))(cmd_closure)
_verb("ideal-gen", "ideal generated by elements")(_setup((("gens",), {"nargs": "+"})))(cmd_ideal_gen)
_verb("ideal-member", "is u in the ideal?")(_setup("u", "ideal"))(cmd_ideal_member)
_verb("ideal-basis", "first basis vectors of an ideal")(
    _setup("ideal", (("--limit",), {"type": int, "default": 10})))(cmd_ideal_basis)
_verb("centralizer", "centralizer of an ideal, or all centralizers of u_n given n")(_setup("ideal"))(cmd_centralizer)
_verb("series", "derived, lower or central series terms")(
    _setup((("kind",), {"choices": ["derived", "lower", "central"]}), (("n",), {"type": int}),
           (("lam",), {"nargs": "?"})))(cmd_series)
_verb("iso", "are two factor algebras isomorphic?")(_setup("f1", "f2"))(cmd_iso)
_verb("udim", "uniserial dimension of a factor algebra (or 'oo')")(_setup("factor"))(cmd_udim)
_verb("f-map", "apply the epimorphism f_n")(
    _setup("u", (("--times",), {"type": int, "default": 1})))(cmd_f_map)
_verb("weyl-mul", "normal-ordered Weyl product")(_setup("a", "b"))(cmd_weyl_mul)
_verb("weyl-in-image", "is a Weyl element in the image of U(u_n)?")(
    _setup("a", (("--express",), {"action": "store_true"})))(cmd_weyl_in_image)
_verb("weyl-kernel-check", "check a kernel generator relation")(_setup("u", "v"))(cmd_weyl_kernel_check)
_verb("mod-ord", "ordinal degree of a polynomial")(_setup("p"))(cmd_mod_ord)
_verb("mod-prime", "the enlargements P' and P'' of a submodule")(_setup("sub"))(cmd_mod_prime)
_verb("mod-ann", "annihilator of a submodule")(_setup("sub"))(cmd_mod_ann)
_verb("endo", "apply a power-series endomorphism")(_setup("coeffs", "p"))(cmd_endo)
_verb("inf-classify", "normal form of an ideal of u_oo (or the ideal an element generates)")(_setup("x"))(cmd_inf_classify)
_verb("inf-iso", "are two factors of u_oo isomorphic?")(_setup("i", "j"))(cmd_inf_iso)
_verb("inf-witness", "non-nilpotence witness for ad a on the completion")(
    _setup("a", (("--steps",), {"type": int, "default": 3}), (("--depth",), {"type": int})))(cmd_inf_witness)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triad", description="Triangular polynomial derivation algebras.")
    sub = parser.add_subparsers(dest="verb", required=True)
    common = _common()
    for name, (_, setup, help_) in VERBS.items():
        sp = sub.add_parser(name, parents=[common], help=help_)
        setup(sp)
    return parser


def _config(ns: argparse.Namespace) -> Config:
    cfg = Config.from_file(ns.config) if ns.config else Config()
    return cfg.override(rank=ns.rank, window=ns.window, cap=ns.cap, seed=ns.seed, json=ns.json or None)


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fn = VERBS[ns.verb][0]
    try:
        cfg = _config(ns)
        text, data = fn(ns, cfg)
    except GrammarError as exc:
        print(f"syntax error: {exc}", file=err)
        return 2
    except (TriadError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    if cfg.json:
        print(json.dumps(data, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
