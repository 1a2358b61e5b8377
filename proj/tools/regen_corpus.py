#!/usr/bin/env python3
"""Regenerate the golden corpus by replaying each case against the CLI.

Usage: regen_corpus.py <path-to-borderline-binary> [corpus-dir]

Each case file records the argument vector, the expected exit code, and the
exact bytes the command printed to stdout.  Rerunning this script refreshes
the recorded outputs; review the diff before committing a refresh.
"""
import json
import pathlib
import subprocess
import sys

CASES = {
    "ann": ["ann", "x0*x1^2*x2^3"],
    "ann_json": ["ann", "--json", "x0*x1^2*x2^3"],
    "hf_row": ["hf", "--ring", "P2", "--ideal", "y0^2,y1^3,y2^4",
               "--range", "0..6"],
    "hf_multidegree": ["hf", "--ring", "P1xP1", "--ideal", "a1*b1",
                       "--degree", "(1,1)", "--degree", "(2,2)"],
    "ring_product": ["ring", "P2xP2xP2"],
    "gb_lex": ["gb", "--ring", "P2", "--order", "lex:y0<y1<y2",
               "--ideal", "y0*y2^2 + y1^3, y0^2*y2, y0^2*y1"],
    "gb_grevlex": ["gb", "--ring", "P2",
                   "--ideal", "y1^2 - y0*y2, y1*y2 - y0^2"],
    "sat_line": ["sat", "--ring", "P2", "--ideal", "y0^2, y0*y1, y0*y2"],
    "hom0_quadrics": ["hom0", "--ring", "P2",
                      "--ideal", "y0^2*y1^2, y0^2*y2^2, y0^3*y2, "
                                 "y0^2*y1*y2, y0*y1*y2^4, y1*y2^5, "
                                 "y0*y2^5, y0^2*y2^4, y1^2*y2^4"],
    "ext1_flat_limit": ["ext1", "--ring", "P2",
                        "--ideal", "y0*y1, y0*y2, y1^6",
                        "--sub", "y0*y2^2, y0^2*y2, y0^2*y1, y0*y1^3, y1^6"],
    "monomial_br": ["monomial-br", "x0*x1^2*x2^3"],
    "monomial_br_json": ["monomial-br", "--json", "x0^2*x1^2*x2^2"],
    "enumerate_points": ["enumerate", "--filter", "x0*x1*x2", "-r", "4",
                         "--cap", "4"],
    "wild3_diagonal": ["wild3", "--m", "3", "--tensor", "@data/diag.json"],
    "wild3_wild": ["wild3", "--m", "3", "--ring", "P2xP2xP2", "--tensor",
                   "a2*b1*c2 + a2*b2*c1 + a1*b1*c3 + a1*b3*c1 + a3*b1*c1"],
    "wild3_json": ["wild3", "--json", "--m", "3", "--tensor",
                   "@data/diag.json"],
    "identifiable_yes": ["identifiable", "x0^3 + x1^3 + x2^3", "-r", "3"],
    "identifiable_no": ["identifiable", "x0*x1^2*x2^3", "-r", "6"],
    "vspbar_cubic": ["vspbar", "x0*x1*x2"],
    "vspbar_cubic_json": ["vspbar", "--json", "x1^2*x2 - x0^3"],
    "vspbar_cw": ["vspbar", "--cw", "C", "--n", "3"],
    "vspbar_monomial": ["vspbar", "--monomial", "1,2,4"],
    "vspbar_ci": ["vspbar", "--ci", "y0^2, y1^4", "x0*x1^3*x2^4"],
    "error_bad_ring": ["hf", "--ring", "Q7", "--ideal", "y0",
                       "--range", "0..2"],
}


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__)
        return 1
    binary = pathlib.Path(sys.argv[1]).resolve()
    corpus = pathlib.Path(sys.argv[2] if len(sys.argv) > 2 else
                          pathlib.Path(__file__).parent.parent / "corpus")
    for name, args in sorted(CASES.items()):
        argv = [str(binary)]
        for a in args:
            if a.startswith("@") and not a.startswith("@/"):
                argv.append("@" + str(corpus / a[1:]))
            else:
                argv.append(a)
        proc = subprocess.run(argv, capture_output=True, text=True)
        case = {"args": args, "exit": proc.returncode, "output": proc.stdout}
        path = corpus / f"{name}.json"
        path.write_text(json.dumps(case, indent=2) + "\n")
        print(f"{name}: exit {proc.returncode}, {len(proc.stdout)} bytes")
    return 0


if __name__ == "__main__":
    sys.exit(main())
