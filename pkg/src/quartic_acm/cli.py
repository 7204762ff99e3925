"""Command-line front door.

Thin client over the service handlers: each verb builds the same request
model the HTTP endpoint accepts and calls the shared handler in-process,
so CLI and service verdicts can never diverge.

Exit codes: 0 verified/true verdict, 1 falsified verdict, 2 usage or
input error.
"""

from __future__ import annotations

import functools
import json
import sys

import click

from .algebra import FieldError, ParseError
from .corpus import corpus_generate
from .pfaffian import ShapeError
from .picard import FlagError, LatticeError
from .service import handlers, models

_INPUT_ERRORS = (
    ParseError,
    FieldError,
    ShapeError,
    LatticeError,
    FlagError,
    ValueError,
    OSError,
    json.JSONDecodeError,
)


def _guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except click.exceptions.Exit:
            raise
        except _INPUT_ERRORS as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)

    return wrapper


def _load(path):
    with open(path) as fh:
        return json.load(fh)


def _emit(response, verdict, as_json, summary):
    """Print the verdict and exit 0 (verified) or 1 (falsified)."""
    if as_json:
        click.echo(response.model_dump_json(indent=2))
    else:
        click.echo(summary)
    sys.exit(0 if verdict else 1)


def _points_payload(path):
    data = _load(path)
    return models.PointsPayload(points=data["points"])


def _lattice_payload(path):
    data = _load(path)
    return models.LatticePayload(gram=data["gram"], h=data["h"])


def _class_vector(text):
    return [int(x) for x in text.split(",")]


def _flags_payload(text):
    names = [t for t in (text or "").split(",") if t]
    alias = {
        "effective": "D_effective",
        "irreducible": "D_irreducible",
        "h0-d-minus-h-vanishes": "h0_D_minus_h_vanishes",
        "h0-2h-minus-d-vanishes": "h0_2h_minus_D_vanishes",
    }
    kwargs = {}
    for name in names:
        key = alias.get(name.lower())
        if key is None:
            raise ValueError(f"unknown flag {name!r}; known: {', '.join(alias)}")
        kwargs[key] = True
    return models.FlagsPayload(**kwargs)


json_option = click.option("--json", "as_json", is_flag=True, help="machine-readable output")


@click.group()
def main():
    """Exact-arithmetic toolkit for quartic surfaces in P^3: pfaffian and
    determinantal representations, degree-8 point schemes and Picard-lattice
    stability verdicts."""


# -- pfaffian ---------------------------------------------------------------


@main.group()
def pfaffian():
    """Skew-symmetric matrices of forms."""


@pfaffian.command("pf")
@click.option("--matrix", "matrix_path", required=True, type=click.Path(exists=True))
@json_option
@_guard
def pfaffian_pf(matrix_path, as_json):
    """Print the pfaffian of a skew matrix JSON file."""
    req = models.PfaffianRequest(matrix=models.SkewMatrixPayload(**_load(matrix_path)))
    resp = handlers.compute_pfaffian(req)
    _emit(resp, True, as_json, f"pf = {resp.pfaffian}")


@pfaffian.command("shape")
@click.option("--matrix", "matrix_path", required=True, type=click.Path(exists=True))
@json_option
@_guard
def pfaffian_shape(matrix_path, as_json):
    """Validate the graded block shape of a skew matrix."""
    req = models.PfaffianRequest(matrix=models.SkewMatrixPayload(**_load(matrix_path)))
    resp = handlers.check_shape(req)
    lines = ["shape valid" if resp.valid else "shape INVALID"] + resp.violations
    _emit(resp, resp.valid, as_json, "\n".join(lines))


@pfaffian.command("verify")
@click.option("--matrix", "matrix_path", required=True, type=click.Path(exists=True))
@click.option("--f", "f_text", required=True, help="quartic form in x0..x3")
@json_option
@_guard
def pfaffian_verify(matrix_path, f_text, as_json):
    """Check pf(M) = lambda * f."""
    req = models.VerifyRequest(
        matrix=models.SkewMatrixPayload(**_load(matrix_path)), f=f_text, mode="pfaffian"
    )
    resp = handlers.verify_matrix(req)
    msg = f"verified: lambda = {resp.scale}" if resp.verified else f"mismatch: {resp.reason}"
    _emit(resp, resp.verified, as_json, msg)


# -- surface ------------------------------------------------------------


@main.group()
def surface():
    """Quartic surfaces and their matrix representations."""


@surface.command("build-pfaffian")
@click.option("--quadrics", "quadrics_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", type=click.Path(), help="write the matrix JSON here")
@json_option
@_guard
def surface_build(quadrics_path, out_path, as_json):
    """Assemble the 4x4 skew matrix with pfaffian q1*q2 + q3*q4 + q5*q6."""
    data = _load(quadrics_path)
    resp = handlers.build_pfaffian(models.QuadricsRequest(quadrics=data["quadrics"]))
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(resp.matrix.model_dump_json(indent=2))
    _emit(resp, True, as_json, f"pf = {resp.pfaffian}")


@surface.command("verify")
@click.option("--matrix", "matrix_path", required=True, type=click.Path(exists=True))
@click.option("--f", "f_text", required=True)
@click.option("--mode", type=click.Choice(["pfaffian", "determinant"]), default="pfaffian")
@json_option
@_guard
def surface_verify(matrix_path, f_text, mode, as_json):
    """Check pf(M) or det(M) = lambda * f."""
    data = _load(matrix_path)
    if mode == "pfaffian":
        req = models.VerifyRequest(
            matrix=models.SkewMatrixPayload(**data), f=f_text, mode=mode
        )
        resp = handlers.verify_matrix(req)
    else:
        resp = handlers.verify_determinant(
            models.DetVerifyRequest(entries=data["entries"], f=f_text)
        )
    msg = f"verified: lambda = {resp.scale}" if resp.verified else f"mismatch: {resp.reason}"
    _emit(resp, resp.verified, as_json, msg)


@surface.command("smooth")
@click.option("--f", "f_text", required=True)
@click.option("--primes", required=True, help="comma-separated primes, e.g. 101,103")
@json_option
@_guard
def surface_smooth(f_text, primes, as_json):
    """Smoothness probe over F_p for each given prime."""
    plist = [int(p) for p in primes.split(",")]
    resp = handlers.smooth_probe(models.SmoothRequest(f=f_text, primes=plist))
    lines = []
    for v in resp.verdicts:
        if v.smooth:
            lines.append(f"p={v.prime}: certified smooth mod {v.prime}")
        else:
            lines.append(f"p={v.prime}: singular point {tuple(v.witness)}")
    _emit(resp, resp.all_smooth, as_json, "\n".join(lines))


@surface.command("phi8")
@click.option("--b", "b_path", required=True, type=click.Path(exists=True),
              help="4x4 skew matrix of quadrics (JSON)")
@click.option("--a", "a_path", required=True, type=click.Path(exists=True),
              help='{"entries": 4x4 linear forms} (JSON)')
@json_option
@_guard
def surface_phi8(b_path, a_path, as_json):
    """Assemble [[B, A], [-A^T, 0]] and report pf = sign * det(A)."""
    req = models.Phi8Request(
        b=models.SkewMatrixPayload(**_load(b_path)), a=_load(a_path)["entries"]
    )
    resp = handlers.build_phi8(req)
    if resp.degenerate:
        _emit(resp, False, as_json, "degenerate: det(A) = 0, pf = 0 (not a surface)")
    _emit(resp, True, as_json, f"pf = {resp.sign:+d} * det(A), det(A) = {resp.det_a}")


# -- scheme ----------------------------------------------------------------


@main.group()
def scheme():
    """Zero-dimensional point schemes in P^3."""


@scheme.command("hilbert")
@click.option("--points", "points_path", required=True, type=click.Path(exists=True))
@json_option
@_guard
def scheme_hilbert(points_path, as_json):
    """Hilbert function, h-vector and socle degree."""
    resp = handlers.scheme_hilbert(models.SchemeRequest(points=_points_payload(points_path)))
    msg = (
        f"degree {resp.degree}: hf = {tuple(resp.hf)}, "
        f"h-vector = {tuple(resp.hvec)}, socle degree = {resp.socle_degree}"
    )
    _emit(resp, True, as_json, msg)


@scheme.command("cb")
@click.option("--points", "points_path", required=True, type=click.Path(exists=True))
@click.option("--m", "twist", required=True, type=int)
@json_option
@_guard
def scheme_cb(points_path, twist, as_json):
    """Leave-one-out Cayley-Bacharach test in degree m."""
    resp = handlers.scheme_cb(
        models.CBRequest(points=_points_payload(points_path), m=twist)
    )
    if resp.holds:
        msg = f"CB holds in degree {resp.twist} (ideal dimension {resp.base_dimension})"
    else:
        msg = f"CB fails in degree {resp.twist}: removing {resp.offender} enlarges the system"
    _emit(resp, resp.holds, as_json, msg)


@scheme.command("ag")
@click.option("--points", "points_path", required=True, type=click.Path(exists=True))
@json_option
@_guard
def scheme_ag(points_path, as_json):
    """Arithmetically-Gorenstein test (Hilbert symmetry + CB)."""
    resp = handlers.scheme_ag(models.SchemeRequest(points=_points_payload(points_path)))
    if resp.is_ag:
        msg = f"aG: h-vector = {tuple(resp.hvec)}, socle degree = {resp.socle_degree}"
    else:
        msg = f"not aG ({resp.failed_condition} fails), h-vector = {tuple(resp.hvec)}"
    _emit(resp, resp.is_ag, as_json, msg)


@scheme.command("classify")
@click.option("--points", "points_path", required=True, type=click.Path(exists=True))
@json_option
@_guard
def scheme_classify(points_path, as_json):
    """Degree-8 classifier: n4-type / n6-type / not-aG / plane-excluded."""
    resp = handlers.scheme_classify(
        models.SchemeRequest(points=_points_payload(points_path))
    )
    ok = resp.kind in ("n4-type", "n6-type")
    msg = resp.kind
    if resp.quadric_quotient:
        msg += f" (quadric-ideal quotient at t=3,4,5: {tuple(resp.quadric_quotient)})"
    _emit(resp, ok, as_json, msg)


# -- picard ---------------------------------------------------------------


@main.group()
def picard():
    """Picard-lattice arithmetic on a quartic K3."""


@picard.command("pair")
@click.option("--lattice", "lattice_path", required=True, type=click.Path(exists=True))
@click.option("--d1", required=True)
@click.option("--d2", required=True)
@json_option
@_guard
def picard_pair(lattice_path, d1, d2, as_json):
    """Intersection number D1.D2."""
    resp = handlers.picard_pair(
        models.PairRequest(
            lattice=_lattice_payload(lattice_path),
            d1=_class_vector(d1),
            d2=_class_vector(d2),
        )
    )
    _emit(resp, True, as_json, f"D1.D2 = {resp.value}")


@picard.command("rr")
@click.option("--lattice", "lattice_path", required=True, type=click.Path(exists=True))
@click.option("--r", "rank", required=True, type=int)
@click.option("--c1", required=True)
@click.option("--c2", required=True, type=int)
@json_option
@_guard
def picard_rr(lattice_path, rank, c1, c2, as_json):
    """Riemann-Roch: chi = 2r + c1^2/2 - c2."""
    resp = handlers.picard_rr(
        models.RRRequest(
            lattice=_lattice_payload(lattice_path), r=rank, c1=_class_vector(c1), c2=c2
        )
    )
    _emit(resp, True, as_json, f"chi = {resp.chi}")


@picard.command("classify")
@click.option("--lattice", "lattice_path", required=True, type=click.Path(exists=True))
@click.option("--d", required=True)
@click.option("--flags", default="", help="comma-separated: effective,irreducible,"
              "h0-d-minus-h-vanishes,h0-2h-minus-d-vanishes")
@json_option
@_guard
def picard_classify(lattice_path, d, flags, as_json):
    """aCM line-bundle case (a/b/c/d/none) of the class D."""
    resp = handlers.picard_classify(
        models.DivisorRequest(
            lattice=_lattice_payload(lattice_path),
            d=_class_vector(d),
            flags=_flags_payload(flags),
        )
    )
    _emit(resp, resp.case != "none", as_json, f"case {resp.case}")


@picard.command("stability")
@click.option("--lattice", "lattice_path", required=True, type=click.Path(exists=True))
@click.option("--d", required=True)
@json_option
@_guard
def picard_stability(lattice_path, d, as_json):
    """Stability verdict for the extension with sub-line-bundle O(D)."""
    resp = handlers.picard_stability(
        models.DivisorRequest(lattice=_lattice_payload(lattice_path), d=_class_vector(d))
    )
    msg = (
        f"{resp.kind.replace('_', ' ')} "
        f"(mu = {resp.mu_sub} vs {resp.mu_total}, "
        f"reduced polynomials {resp.reduced_sub} vs {resp.reduced_total})"
    )
    _emit(resp, resp.kind != "unstable", as_json, msg)


@picard.command("family-dim")
@click.option("--lattice", "lattice_path", required=True, type=click.Path(exists=True))
@click.option("--d", required=True)
@json_option
@_guard
def picard_family(lattice_path, d, as_json):
    """Extension-family dimension h^1(O(2D-2h)) under the vanishing flags."""
    resp = handlers.picard_family_dim(
        models.DivisorRequest(
            lattice=_lattice_payload(lattice_path),
            d=_class_vector(d),
            flags=models.FlagsPayload(
                h0_D_minus_h_vanishes=True, h0_2h_minus_D_vanishes=True
            ),
        )
    )
    _emit(resp, True, as_json,
          f"h1 = {resp.h1}, projective family dimension = {resp.projective_dimension}")


@picard.command("sequiv")
@click.option("--lattice", "lattice_path", required=True, type=click.Path(exists=True))
@click.option("--d1", required=True)
@click.option("--d2", required=True)
@json_option
@_guard
def picard_sequiv(lattice_path, d1, d2, as_json):
    """S-equivalence of the boundary bundles attached to D1 and D2."""
    resp = handlers.picard_sequiv(
        models.SEquivRequest(
            lattice=_lattice_payload(lattice_path),
            d1=_class_vector(d1),
            d2=_class_vector(d2),
        )
    )
    _emit(resp, resp.equivalent, as_json,
          "S-equivalent" if resp.equivalent else "not S-equivalent")


# -- corpus / serve ----------------------------------------------------------


@main.group()
def corpus():
    """Built-in example inputs."""


@corpus.command("generate")
@click.argument("target_dir", type=click.Path())
@_guard
def corpus_cmd(target_dir):
    """Write the example corpus (point schemes, quartics, lattices)."""
    for path in corpus_generate(target_dir):
        click.echo(str(path))


@main.command("serve")
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("quartic_acm.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
