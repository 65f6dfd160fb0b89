"""Print resolvent classes of P^j for a grid of tame covers, with both identity checks.

    python scripts/local_cover_sweep.py --q 5 7 13 --emax 6
"""
import argparse

from lambdacl.local_cover import (chase_rhs, check_different_identity, different_sum, resolvent_cokernel,
                                  setup_cover)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[5, 7, 13])
    ap.add_argument("--emax", type=int, default=6)
    args = ap.parse_args()

    print(f"{'q':>3} {'e':>2} {'j':>3} {'v_s':>4}  {'class':<20} {'chase':<6} different")
    bad = 0
    for q in args.q:
        for e in range(2, args.emax + 1):
            if (q - 1) % e:
                continue
            c = setup_cover(q, e)
            for j in range(-e, e + 1):
                r = resolvent_cokernel(c, j)
                chase = r.torsion_class == chase_rhs(c, j)
                diff = "-"
                if j <= 0:
                    ok = check_different_identity(c, j, r).passed
                    k = (different_sum(c, j) - r.torsion_class).regular_multiple()
                    diff = f"{'ok' if ok else 'FAIL'} ({k} r_G)"
                    bad += not ok
                bad += not chase
                cls = ",".join(map(str, r.torsion_class.multiplicities))
                print(f"{q:>3} {e:>2} {j:>+3} {r.det_valuation:>4}  {cls:<20} {'ok' if chase else 'FAIL':<6} {diff}")
    print(f"{bad} failures")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
