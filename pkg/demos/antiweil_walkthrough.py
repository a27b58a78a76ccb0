#!/usr/bin/env python3
"""Build the 8-dimensional quaternionic representation at
(D', D, a) = (-1, -2, -3) and run every verification layer, printing
what each one establishes.

Run:  python3 demos/antiweil_walkthrough.py
"""

from cmsweep.quatrep import (build_antiweil_rep, e_a1_triples, sl2_triple,
                             verify_e_a1_brackets)


def main():
    print("Step 1: a single sl(2)-triple inside the quaternion algebra")
    tri = sl2_triple(-3, -1)
    print(f"  brackets [h,x]=2x, [h,y]=-2y, [x,y]=h: "
          f"{tri.verify_brackets()}")

    print("\nStep 2: two commuting triples in the J-extended algebra")
    alg, gens = e_a1_triples(-2, -3)
    print(f"  all 15 pairwise bracket identities: "
          f"{verify_e_a1_brackets(alg, gens)}")

    print("\nStep 3: the 8-dimensional realization over Q(i, sqrt-2, sqrt-3)")
    rep = build_antiweil_rep(-1, -2, -3)
    print(f"  matrix brackets:        {rep.verify_matrix_brackets()}")
    ok, failures = rep.verify_galois_equivariance()
    print(f"  Galois equivariance:    {ok} (144 identities, "
          f"{len(failures)} failures)")
    sym_ok, checks = rep.verify_symplectic()
    print(f"  symplectic form:        {sym_ok}")
    for k, v in checks.items():
        print(f"    {k:>20}: {v}")
    print(f"  irreducibility:         {rep.verify_irreducibility()}")

    print("\nStep 4: rational descent")
    model = rep.rational_model()
    print(f"  rational matrices for: {sorted(model)}")
    print("  nonzero entries of the image of i:")
    for r, row in enumerate(model["i"]):
        for c, x in enumerate(row):
            if x != 0:
                print(f"    [{r}][{c}] = {x}")


if __name__ == "__main__":
    main()
