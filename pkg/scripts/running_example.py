"""Dreams and expansions for f = (1 -> 2, 3 -> 4) in Gr_2(4), all four modes."""
from ipdreams.classes import expand
from ipdreams.cli import render_dream
from ipdreams.dreams import Mode, enumerate_dreams
from ipdreams.verify import RUNNING_EXAMPLE, running_example_kt_weights, printed_kt_weight_list, same_multiset


def main():
    f = RUNNING_EXAMPLE
    print(f)
    for mode in Mode:
        dreams = enumerate_dreams(f, mode)
        print(f"\n== {mode.value}: {len(dreams)} dreams")
        print(expand(f, mode))
    print("\n== KT dreams")
    e = expand(f, Mode.KT)
    for P, rec in zip(enumerate_dreams(f, Mode.KT), e.records):
        print(f"\nlambda={rec.lam} sign={rec.sign:+d} weight={rec.weight}")
        print("\n".join(render_dream(P)))
    ours, printed = running_example_kt_weights(), printed_kt_weight_list()
    print("\nKT weights:        ", ", ".join(map(str, ours)))
    print("printed weight list:", ", ".join(map(str, printed)))
    print("same multiset:", same_multiset(ours, printed))


if __name__ == "__main__":
    main()
