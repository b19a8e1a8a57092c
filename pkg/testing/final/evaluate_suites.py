import random
from concurrent.futures import ProcessPoolExecutor, as_completed
from functools import partial

from codecarbon import track_emissions
from prettytable import PrettyTable

from recoloureur.colouring.colouring_base import Colouring, class_partition, colour_classes, free_colours, is_proper
from recoloureur.colouring.colouring_chromatic import chi_3k1_free, chromatic_number_exact
from recoloureur.families.families_basic import FamilySpec
from recoloureur.families.families_random import gen_random_in_class
from recoloureur.graph.graph_induced import find_induced_c5
from recoloureur.oracle.oracle_mixing import oracle_distance
from recoloureur.oracle.oracle_states import state_space_size
from recoloureur.recolour.recolour_2k2c4 import recolour_2k2c4
from recoloureur.recolour.recolour_3k1 import recolour_3k1
from recoloureur.recolour.recolour_p3p1 import recolour_p3p1
from recoloureur.recolour.recolour_p5c4 import p5c4_chromatic_number, recolour_p5c4, split_off_blowup
from recoloureur.recolour.recolour_path import apply_and_validate
from recoloureur.recolour.recolour_renaming import renaming_path


# Each suite: the random family it draws from, the algorithm, and the
# per-instance limits (total steps per vertex, recolourings of one vertex).
SUITES = {
    "renaming": ("random_p3p1_free", None, 2, 2),
    "3k1": ("random_3k1_free", None, 1, 1),
    "p3p1": ("random_p3p1_free", recolour_p3p1, 6, 6),
    "two_k2_c4": ("random_2k2c4_free", recolour_2k2c4, 4, None),
    "p5c4": ("random_p5c4_free", recolour_p5c4, None, None),
}

# Instances whose reconfiguration graph has at most this many states are
# also checked against the exact shortest-path distance.
ORACLE_STATES = 10 ** 6

# The p5c4 suite must see at least this many C5 blow-ups with a non-empty
# clique cutset.
MIN_CUT_OFF_BLOWUPS = 30


def _random_proper(g, palette, rng):
    chi, base = chromatic_number_exact(g)
    mapping = rng.sample(range(1, palette + 1), chi)
    colours = [mapping[c - 1] for c in base.colours]
    for _ in range(4 * g.vertex_count):
        v = rng.randrange(g.vertex_count)
        options = free_colours(g, colours, v, range(1, palette + 1))
        if options:
            colours[v] = rng.choice(options)
    return Colouring(tuple(colours), palette)


# ------------- WORKER FUNCTION (RUNS IN PARALLEL) ---------------- #

def evaluate_single_instance(seed, suite):
    """Run one suite on one seeded instance and return its violation counts."""
    family, algorithm, length_factor, per_vertex = SUITES[suite]
    rng = random.Random(seed)
    g = gen_random_in_class(FamilySpec(family, seed=seed))
    n = g.vertex_count
    result = {"instances": 1, "invalid": 0, "too_long": 0, "vertex_overused": 0, "above_oracle": 0,
              "oracle_checked": 0, "cut_off": 0, "steps": 0}

    if suite == "renaming":
        palette = chromatic_number_exact(g)[0] + 1 + seed % 2
        a = _random_proper(g, palette, rng)
        order = list(range(1, palette + 1))
        rng.shuffle(order)
        b = Colouring(tuple(order[c - 1] for c in a.colours), palette)
        if len(set(b.colours)) >= palette:
            return result
        path = renaming_path(g, palette, a, b)
    elif suite == "3k1":
        chi, optimal = chi_3k1_free(g)
        palette = chi + 1 + seed % 2
        a = _random_proper(g, palette, rng)
        path = recolour_3k1(g, palette, a, colour_classes(optimal))
        final = apply_and_validate(g, path).final
        # any colouring with the target classes is an acceptable end point
        b = final if class_partition(final) == class_partition(optimal) else None
    else:
        chi = p5c4_chromatic_number(g) if suite == "p5c4" else chromatic_number_exact(g)[0]
        palette = chi + 1 + seed % 3
        a, b = _random_proper(g, palette, rng), _random_proper(g, palette, rng)
        path = algorithm(g, palette, a, b)
        if suite == "p5c4" and find_induced_c5(g) is not None and split_off_blowup(g)[1]:
            result["cut_off"] = 1

    final, ok, _ = apply_and_validate(g, path)
    if not ok or final != b or not is_proper(g, final):
        result["invalid"] += 1
    if length_factor is not None and len(path) > length_factor * n:
        result["too_long"] += 1
    if per_vertex is not None and path.max_per_vertex() > per_vertex:
        result["vertex_overused"] += 1
    if b is not None and state_space_size(n, palette) <= ORACLE_STATES:
        result["oracle_checked"] = 1
        distance = oracle_distance(g, palette, a, b, ORACLE_STATES)
        if distance is None or distance > len(path):
            result["above_oracle"] += 1
    result["steps"] = len(path)
    return result


# ---------------- MAIN EVALUATION FUNCTION ---------------- #

@track_emissions
def evaluate_suites(instances_per_suite: int = 200) -> None:
    """
    Runs every property suite on `instances_per_suite` seeded random graphs
    and prints the violation counts.
    """
    fields = ["instances", "invalid", "too_long", "vertex_overused", "above_oracle", "oracle_checked",
              "cut_off", "steps"]
    totals = {suite: dict.fromkeys(fields, 0) for suite in SUITES}

    # ---------------- PARALLEL EXECUTION ---------------- #

    with ProcessPoolExecutor() as executor:
        futures = {}
        for suite in SUITES:
            worker = partial(evaluate_single_instance, suite=suite)
            for seed in range(instances_per_suite):
                futures[executor.submit(worker, seed)] = suite

        for fut in as_completed(futures):
            suite = futures[fut]
            for key, value in fut.result().items():
                totals[suite][key] += value

    # ---------------- BUILD RESULTS TABLE ---------------- #

    table = PrettyTable()
    table.field_names = ["Suite", "Instances", "Invalid", "Too long", "Vertex overused", "Above oracle",
                         "Oracle checked", "Cut-off blow-ups", "Mean steps"]
    for suite, counts in totals.items():
        mean = counts["steps"] / counts["instances"] if counts["instances"] else 0
        table.add_row([suite, counts["instances"], counts["invalid"], counts["too_long"],
                       counts["vertex_overused"], counts["above_oracle"], counts["oracle_checked"],
                       counts["cut_off"], f"{mean:.1f}"])

    overall = sum(counts["invalid"] + counts["too_long"] + counts["vertex_overused"] + counts["above_oracle"]
                  for counts in totals.values())
    if totals["p5c4"]["cut_off"] < MIN_CUT_OFF_BLOWUPS:
        overall += 1
        print(f"p5c4 suite saw {totals['p5c4']['cut_off']} cut-off blow-ups, "
              f"fewer than {MIN_CUT_OFF_BLOWUPS}")
    print(f"Instances per suite: {instances_per_suite}")
    print(f"Total violations: {overall}\n")
    print(table)


if __name__ == "__main__":
    evaluate_suites()
