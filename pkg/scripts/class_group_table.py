"""Print the composition table of the form class group for a negative discriminant.

    python scripts/class_group_table.py -23
"""
import argparse

from wedgemap.binforms import compose, reduce_form, reduced_forms


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("D", type=int)
    args = ap.parse_args()
    forms = reduced_forms(args.D)
    names = {q: f"({q.a},{q.b},{q.c})" for q in forms}
    w = max(len(s) for s in names.values())
    print(f"D = {args.D}, class number {len(forms)}")
    print(" " * w + " | " + " ".join(names[q].rjust(w) for q in forms))
    print("-" * (w + 3 + (w + 1) * len(forms)))
    for p in forms:
        row = [names[reduce_form(compose(p, q))].rjust(w) for q in forms]
        print(names[p].rjust(w) + " | " + " ".join(row))


if __name__ == "__main__":
    main()
