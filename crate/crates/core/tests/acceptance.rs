//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runtime limits are only judged in release builds
//! (`cargo test --release -p weylkit --test acceptance`).

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weylkit::bbw::{
    bbw_cohomology, classify_weight, sheaf_cohomology_cases, weyl_act, weyl_dimension,
    BbwCohomology, IntegralWeight, SheafCase, WeightClass,
};
use weylkit::bruhat::{enumerate_balanced, verify_short_small, EnumerationOptions};
use weylkit::cartan::{CartanType, Factor, Family};
use weylkit::families::{
    distinction_witness, distinction_witness_mu, incidence_generator, incidence_ideal, perm_length,
    principal_2n_generator, principal_2n_ideal, rank_leq, TypeA, Verify,
};
use weylkit::topology::{
    euler_omega, homotopy_distinction, incidence_betti, omega2n_closed_form, omega_betti,
    quotient_homology, splitting_check,
};
use weylkit::{parse_type, BruhatOrder, Elem, ElementSet, Ideal, Parabolic, WeylGroup};

const SEED: u64 = 0x5eed_2024;
const RANK_CRITERION_PAIRS: usize = 100_000;
const SUBWORD_PAIRS: usize = 1_000;
const RANDOM_IDEALS: usize = 1_000;
const WEIGHT_BOX: i64 = 3;

/// Checks that cannot hold as literally stated. They are still run and
/// reported as FAIL, but only fail the process under
/// `WEYLKIT_ACCEPTANCE_STRICT=1`, or if they unexpectedly start to hold.
const UNATTAINABLE: &[(usize, &str)] = &[(5, "μ = (2,6,1,5,4,3) has length 7")];

/// Collects named sub-checks for one criterion.
struct Criterion {
    number: usize,
    failures: Vec<String>,
    unattainable: Vec<String>,
    surprises: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(number: usize) -> Self {
        Self {
            number,
            failures: Vec::new(),
            unattainable: Vec::new(),
            surprises: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        let name = name.into();
        let known = UNATTAINABLE
            .iter()
            .any(|&(n, prefix)| n == self.number && name.starts_with(prefix));
        match (ok, known) {
            (true, false) => {}
            (false, false) => self.failures.push(name),
            (false, true) => self.unattainable.push(name),
            (true, true) => self.surprises.push(name),
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

/// Outcome of one criterion.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Pass,
    Fail,
    /// Fails only on checks listed in [`UNATTAINABLE`].
    KnownFail,
}

fn run(number: usize, title: &str, limit: Duration, body: impl FnOnce(&mut Criterion)) -> Outcome {
    let start = Instant::now();
    let mut c = Criterion::new(number);
    body(&mut c);
    let elapsed = start.elapsed();
    if cfg!(not(debug_assertions)) {
        c.check(
            format!("runtime {:.2?} within {:?}", elapsed, limit),
            elapsed <= limit,
        );
    }
    let outcome = if !c.failures.is_empty() || !c.surprises.is_empty() {
        Outcome::Fail
    } else if !c.unattainable.is_empty() {
        Outcome::KnownFail
    } else {
        Outcome::Pass
    };
    println!(
        "criterion {number:>2}: {}  {title} [{:.2?}]",
        if outcome == Outcome::Pass {
            "PASS"
        } else {
            "FAIL"
        },
        elapsed
    );
    for f in &c.failures {
        println!("              failed: {f}");
    }
    for f in &c.unattainable {
        println!("              failed (known unattainable): {f}");
    }
    for f in &c.surprises {
        println!("              unexpectedly holds, update UNATTAINABLE: {f}");
    }
    for n in &c.notes {
        println!("              note: {n}");
    }
    outcome
}

fn simple_types_rank_le_4() -> Vec<CartanType> {
    let mut out = Vec::new();
    for r in 1..=4 {
        out.push(CartanType::simple(Family::A, r));
    }
    for r in 2..=4 {
        out.push(CartanType::simple(Family::B, r));
    }
    for r in 3..=4 {
        out.push(CartanType::simple(Family::C, r));
    }
    out.push(CartanType::simple(Family::D, 4));
    out.push(CartanType::simple(Family::F, 4));
    out.push(CartanType::simple(Family::G, 2));
    out
}

/// Every product of simple factors with total rank at most 4, each
/// multiset of factors once.
fn all_types_rank_le_4() -> Vec<CartanType> {
    let simple: Vec<Factor> = simple_types_rank_le_4()
        .iter()
        .map(|t| t.factors()[0])
        .collect();
    let mut out = Vec::new();
    fn go(
        simple: &[Factor],
        start: usize,
        budget: usize,
        acc: &mut Vec<Factor>,
        out: &mut Vec<CartanType>,
    ) {
        if !acc.is_empty() {
            out.push(CartanType::new(acc.clone()).expect("valid product"));
        }
        for i in start..simple.len() {
            if simple[i].rank <= budget {
                acc.push(simple[i]);
                go(simple, i, budget - simple[i].rank, acc, out);
                acc.pop();
            }
        }
    }
    go(&simple, 0, 4, &mut Vec::new(), &mut out);
    out
}

fn ty(s: &str) -> CartanType {
    parse_type(s).expect("valid type")
}

fn order_of(s: &str) -> BruhatOrder {
    BruhatOrder::of_type(&ty(s)).expect("group builds")
}

fn criterion_1(c: &mut Criterion) {
    let order = order_of("A2");
    let g = order.group();
    let ideals = enumerate_balanced(&order, None, EnumerationOptions::default()).unwrap();
    c.check("exactly one balanced ideal in A2", ideals.len() == 1);
    let expected = order.ideal_generated_by(&[g.generator(0), g.generator(1)]);
    let expected_set: BTreeSet<Elem> = [g.identity(), g.generator(0), g.generator(1)].into();
    c.check(
        "it is {e, s₁, s₂}",
        ideals
            .first()
            .map(|i| i.elements().into_iter().collect::<BTreeSet<_>>())
            == Some(expected_set),
    );
    let p = Parabolic::trivial(g);
    let b = omega_betti(&order, &p, &expected).unwrap();
    c.check(
        "Ω Betti numbers (1,4,1)",
        b.even_ranks() == [1, 4, 1] && !b.has_odd_support(),
    );
    c.check("χ(Ω) = 6", euler_omega(&order, &p, &expected).unwrap() == 6);
}

fn criterion_2(c: &mut Criterion) {
    for t in all_types_rank_le_4() {
        let has_a1 = t
            .factors()
            .iter()
            .any(|f| f.family == Family::A && f.rank == 1);
        let r = verify_short_small(&t, 1).unwrap();
        c.check(
            format!("{t}: all_small(L=1) = {}", !has_a1),
            r.all_small == !has_a1,
        );
    }
    for s in ["A4", "B3", "C3", "D4", "F4", "G2"] {
        let r = verify_short_small(&ty(s), 2).unwrap();
        c.check(format!("{s}: all_small(L=2)"), r.all_small);
    }
    for s in ["A1", "A2", "A3", "B2"] {
        let t = ty(s);
        let g = WeylGroup::of_type(&t).unwrap();
        let order = BruhatOrder::build(g);
        let r = verify_short_small(&t, 2).unwrap();
        let witnesses_ok = !r.witnesses.is_empty()
            && r.witnesses.iter().all(|w| {
                let x = order.group().evaluate(w.letters());
                w.len() <= 2 && order.group().length(x) == w.len() && !order.is_small(x)
            });
        c.check(
            format!("{s}: explicit non-small witnesses of length ≤ 2"),
            !r.all_small && witnesses_ok,
        );
    }
}

fn criterion_3(c: &mut Criterion) {
    for n in 3..=7 {
        let a = TypeA::new(n).unwrap();
        let order = a.order();
        let g = a.group();
        let f = incidence_ideal(&a, Verify::Always).unwrap();
        let class = order.classify(&f.ideal).unwrap();
        c.check(format!("n={n}: balanced"), class.balanced);
        let p = a.incidence_parabolic().unwrap();
        c.check(
            format!("n={n}: right W_(1,n−1)-invariant"),
            p.is_right_invariant(g, &f.ideal),
        );
        let mut z: Vec<Elem> = (1..n)
            .map(|k| a.elem(&incidence_generator(n, k).unwrap()).unwrap())
            .collect();
        z.sort();
        c.check(
            format!("n={n}: minimal generators are z_1..z_(n−1)"),
            order.minimal_generators(&f.ideal).unwrap() == z,
        );
        c.check(
            format!("n={n}: ℓ(z_k) = (n−1)(n−2)/2"),
            z.iter().all(|&x| 2 * g.length(x) == (n - 1) * (n - 2)),
        );
        let b = omega_betti(order, &p, &f.ideal).unwrap();
        let top = p.max_quotient_length() + 1;
        c.check(
            format!("n={n}: Ω Betti numbers match the closed form"),
            !b.has_odd_support() && (0..=top).all(|k| b.even(k) == incidence_betti(n, k)),
        );
        let cosets = g.order() / p.subgroup().len();
        c.check(
            format!("n={n}: χ(Ω) = |W|/|W_P| = {cosets}"),
            euler_omega(order, &p, &f.ideal).unwrap() == cosets as i64 && cosets == n * (n - 1),
        );
    }
}

fn criterion_4(c: &mut Criterion) {
    for n in 2..=3 {
        let a = TypeA::new(2 * n).unwrap();
        let order = a.order();
        let g = a.group();
        let f = principal_2n_ideal(&a, Verify::Always).unwrap();
        c.check(
            format!("n={n}: balanced"),
            order.classify(&f.ideal).unwrap().balanced,
        );
        let lambda = a.elem(&principal_2n_generator(n).unwrap()).unwrap();
        c.check(
            format!("n={n}: single minimal generator λ"),
            order.minimal_generators(&f.ideal).unwrap() == [lambda],
        );
        c.check(
            format!("n={n}: ℓ(λ) = ℓ(w₀) − n"),
            g.length(lambda) + n == g.max_length(),
        );
        let direct = omega_betti(order, &Parabolic::trivial(g), &f.ideal)
            .unwrap()
            .to_polynomial();
        let closed = omega2n_closed_form(n).unwrap();
        c.check(
            format!("n={n}: closed form equals direct Ω Poincaré polynomial"),
            direct == closed,
        );
        if n == 2 {
            c.check(
                "n=2: 1+4t²+7t⁴+7t⁶+4t⁸+t¹⁰",
                closed.coeffs() == [1, 0, 4, 0, 7, 0, 7, 0, 4, 0, 1],
            );
            c.check("n=2: value 24 at t=1", closed.eval(1) == 24);
        }
    }
}

fn criterion_5(c: &mut Criterion) {
    let report = homotopy_distinction(1, 720).unwrap();
    c.check("S₆ with k = 7", report.n == 3 && report.k == 7);
    c.check(
        "b_2k(Ω_2n) < b_2k(Ω_1/2)",
        report.strict && report.b_principal < report.b_lower_half,
    );

    let a = TypeA::new(6).unwrap();
    let g = a.group();
    let middle = g.length_histogram()[7];
    c.check(
        "b_2k(Ω_1/2) = 2·#ℓ⁻¹(7)",
        report.middle_count == middle && report.b_lower_half == 2 * middle,
    );

    let i2n = principal_2n_ideal(&a, Verify::Always).unwrap().ideal;
    let witness = distinction_witness(1).unwrap();
    let w = a.elem(&witness).unwrap();
    c.check(
        format!("witness {witness} has length 7 and lies outside I_2n"),
        g.length(w) == 7 && !i2n.contains(w),
    );

    let mu = distinction_witness_mu(1).unwrap();
    let mu_elem = a.elem(&mu).unwrap();
    c.check(
        format!("μ = ({mu}) lies outside I_2n"),
        mu.one_line() == [2, 6, 1, 5, 4, 3] && !i2n.contains(mu_elem),
    );
    let mu_len = perm_length(&mu);
    c.check(
        format!("μ = ({mu}) has length 7 (actual length {mu_len})"),
        mu_len == 7,
    );
    if mu_len != 7 {
        c.note(format!(
            "μ as printed has {mu_len} inversions; ({witness}) is a length-7 element outside I_2n"
        ));
    }
}

fn all_ideals(order: &BruhatOrder) -> Vec<Ideal> {
    let n = order.order();
    assert!(n <= 16, "exhaustive ideal enumeration is for tiny groups");
    (0u32..1 << n)
        .filter_map(|mask| {
            let set =
                ElementSet::from_elems(n, (0..n).filter(|i| mask >> i & 1 == 1).map(Elem::new));
            order.ideal(set).ok()
        })
        .collect()
}

/// The parabolics W_D for every subset D of the generators.
fn all_parabolics(g: &WeylGroup) -> Vec<Parabolic> {
    let r = g.rank();
    (0u32..1 << r)
        .map(|mask| {
            let gens: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
            Parabolic::build(g, &gens).unwrap()
        })
        .collect()
}

fn criterion_6(c: &mut Criterion) {
    for s in ["A2", "B2"] {
        let order = order_of(s);
        let g = order.group();
        let parabolics = all_parabolics(g);
        let ideals = all_ideals(&order);
        let mut checked = 0;
        let mut ok = true;
        for ideal in &ideals {
            for p in parabolics.iter().filter(|p| p.is_right_invariant(g, ideal)) {
                ok &= splitting_check(&order, p, ideal).unwrap();
                checked += 1;
            }
        }
        c.check(
            format!(
                "{s}: splitting on all {} ideals ({checked} with domains)",
                ideals.len()
            ),
            ok,
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let orders = [order_of("A3"), order_of("A4")];
    let mut ok = true;
    for _ in 0..RANDOM_IDEALS {
        let order = &orders[rng.gen_range(0..orders.len())];
        let g = order.group();
        let gens: Vec<Elem> = (0..rng.gen_range(1..=4))
            .map(|_| Elem::new(rng.gen_range(0..g.order())))
            .collect();
        let ideal = order.ideal_generated_by(&gens);
        ok &= splitting_check(order, &Parabolic::trivial(g), &ideal).unwrap();
    }
    c.check(
        format!("splitting on {RANDOM_IDEALS} random ideals of A3/A4"),
        ok,
    );

    for s in ["A2", "A3", "B2", "B3"] {
        let order = order_of(s);
        let g = order.group();
        let mut ok = true;
        let mut count = 0;
        for p in all_parabolics(g) {
            let ideals =
                enumerate_balanced(&order, Some(&p), EnumerationOptions::default()).unwrap();
            for ideal in &ideals {
                let omega = omega_betti(&order, &p, ideal).unwrap();
                for genus in [2u64, 3] {
                    let q = quotient_homology(&omega, genus).unwrap();
                    ok &=
                        q.euler_characteristic() == (2 - 2 * genus as i64) * p.num_cosets() as i64;
                }
                count += 1;
            }
        }
        c.check(
            format!("{s}: χ(quotient) = (2−2g)|W/W_D| on {count} balanced (ideal, domain) pairs"),
            ok,
        );
    }
}

fn criterion_7(c: &mut Criterion) {
    let s4 = TypeA::new(4).unwrap();
    let g = s4.group();
    let all = g.elements().all(|x| {
        g.elements()
            .all(|y| rank_leq(s4.perm(x), s4.perm(y)).unwrap() == s4.order().leq(x, y))
    });
    c.check("rank criterion on all of S₄", all);

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let groups: Vec<TypeA> = (5..=7).map(|n| TypeA::new(n).unwrap()).collect();
    let mut mismatches = 0;
    for _ in 0..RANK_CRITERION_PAIRS {
        let a = &groups[rng.gen_range(0..groups.len())];
        let x = Elem::new(rng.gen_range(0..a.group().order()));
        let y = Elem::new(rng.gen_range(0..a.group().order()));
        mismatches += (rank_leq(a.perm(x), a.perm(y)).unwrap() != a.order().leq(x, y)) as usize;
    }
    c.check(
        format!("rank criterion on {RANK_CRITERION_PAIRS} random pairs in S₅–S₇"),
        mismatches == 0,
    );

    let orders: Vec<BruhatOrder> = ["A4", "B3", "D4", "G2", "A1xB2"]
        .iter()
        .map(|s| order_of(s))
        .collect();
    let mut mismatches = 0;
    for _ in 0..SUBWORD_PAIRS {
        let order = &orders[rng.gen_range(0..orders.len())];
        let x = Elem::new(rng.gen_range(0..order.order()));
        let y = Elem::new(rng.gen_range(0..order.order()));
        mismatches += (order.leq_by_subword(x, y) != order.leq(x, y)) as usize;
    }
    c.check(
        format!("subword criterion on {SUBWORD_PAIRS} random pairs"),
        mismatches == 0,
    );

    for t in all_types_rank_le_4() {
        let g = WeylGroup::of_type(&t).unwrap();
        c.check(
            format!("{t}: length = inversion count"),
            g.elements().all(|x| g.length(x) == g.inversion_count(x)),
        );
    }
}

fn criterion_8(c: &mut Criterion) {
    for t in simple_types_rank_le_4() {
        let g = WeylGroup::of_type(&t).unwrap();
        let word = g.bipartite_w0_word(&g.standard_bipartition()).unwrap();
        let rs = g.root_system();
        let h = rs.coxeter_numbers()[0] as usize;
        c.check(
            format!("{t}: bipartite word is reduced"),
            g.is_reduced(word.letters()),
        );
        c.check(
            format!("{t}: bipartite word multiplies to w₀"),
            g.evaluate(word.letters()) == g.w0(),
        );
        c.check(
            format!("{t}: length |Σ⁺| = rank·h/2"),
            word.len() == rs.num_positive() && 2 * word.len() == t.rank() * h,
        );
    }
}

fn criterion_9(c: &mut Criterion) {
    let a1 = WeylGroup::of_type(&ty("A1")).unwrap();
    let wt = |v: &[i64]| IntegralWeight(v.to_vec());
    c.check(
        "A1, λ=0: all cohomology vanishes",
        bbw_cohomology(&a1, &wt(&[0])).unwrap() == BbwCohomology::AllVanish,
    );
    for (l, degree) in [(1, 0), (-1, 1)] {
        let ok = matches!(
            bbw_cohomology(&a1, &wt(&[l])).unwrap(),
            BbwCohomology::Nonzero { degree: d, dimension: 1, .. } if d == degree
        );
        c.check(format!("A1, λ={l}: degree {degree}, dimension 1"), ok);
    }
    let a2 = WeylGroup::of_type(&ty("A2")).unwrap();
    let ok = matches!(
        bbw_cohomology(&a2, &IntegralWeight(vec![2, 2])).unwrap(),
        BbwCohomology::Nonzero {
            degree: 0,
            dimension: 8,
            ..
        }
    );
    c.check("A2, λ=2δ: degree 0, dimension 8", ok);

    for s in ["A2", "B2"] {
        let g = WeylGroup::of_type(&ty(s)).unwrap();
        let mut ok = true;
        for x in -WEIGHT_BOX..=WEIGHT_BOX {
            for y in -WEIGHT_BOX..=WEIGHT_BOX {
                let lambda = wt(&[x, y]);
                let making: Vec<Elem> = g
                    .elements()
                    .filter(|&w| weyl_act(&g, w, &lambda).unwrap().is_strictly_dominant())
                    .collect();
                ok &= match classify_weight(&g, &lambda).unwrap() {
                    WeightClass::Regular {
                        w,
                        length,
                        dominant_form,
                    } => {
                        making == [w]
                            && g.length(w) == length
                            && weyl_act(&g, w, &lambda).unwrap() == dominant_form
                    }
                    WeightClass::NotRegular { .. } => making.is_empty(),
                };
            }
        }
        c.check(format!("{s}: unique dominant-making w on [−3,3]²"), ok);
    }

    // Case classification and degree windows.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let groups: Vec<WeylGroup> = ["A2", "B2", "G2", "A3"]
        .iter()
        .map(|s| WeylGroup::of_type(&ty(s)).unwrap())
        .collect();
    let mut ok = true;
    for _ in 0..500 {
        let g = &groups[rng.gen_range(0..groups.len())];
        let lambda = IntegralWeight((0..g.rank()).map(|_| rng.gen_range(-4..=4)).collect());
        let k = rng.gen_range(1..=g.max_length() + 2);
        let cd = rng.gen_range(0..=3);
        let r = sheaf_cohomology_cases(g, &lambda, k, cd).unwrap();
        ok &= match (classify_weight(g, &lambda).unwrap(), r.case) {
            (WeightClass::NotRegular { .. }, SheafCase::NotRegular) => {
                (0..k).all(|i| r.known_zero(i))
            }
            (WeightClass::Regular { length, .. }, case) => {
                let expected = match length {
                    0 => SheafCase::Dominant,
                    l if l < k => SheafCase::ShortElement,
                    l if l == k => SheafCase::RegularAtThreshold,
                    _ => SheafCase::LongElement,
                };
                let hw_dim = r
                    .highest_weight
                    .as_ref()
                    .map(|mu| weyl_dimension(g, mu).is_ok());
                case == expected && r.length == Some(length) && hw_dim == Some(true)
            }
            _ => false,
        };
    }
    c.check(
        "sheaf-cohomology case classification on 500 random inputs",
        ok,
    );
    c.note(
        "group-cohomology coefficients are outside the model; only cases and windows are checked",
    );
}

fn criterion_10(c: &mut Criterion) {
    let render = |s: &str, gens: Option<&[usize]>, parallel: bool| -> String {
        let order = order_of(s);
        let p = gens.map(|gens| Parabolic::build(order.group(), gens).unwrap());
        let ideals = enumerate_balanced(
            &order,
            p.as_ref(),
            EnumerationOptions {
                parallel,
                ..EnumerationOptions::default()
            },
        )
        .unwrap();
        let docs: Vec<_> = ideals
            .iter()
            .map(|i| order.ideal_to_doc(i).unwrap())
            .collect();
        serde_json::to_string(&docs).unwrap()
    };
    for (s, gens) in [
        ("A3", None),
        ("B3", None),
        ("A3", Some(&[0usize][..])),
        ("G2", None),
    ] {
        let reference = render(s, gens, true);
        let same = render(s, gens, true) == reference && render(s, gens, false) == reference;
        c.check(
            format!("{s} {gens:?}: byte-identical across runs and parallelism"),
            same,
        );
    }
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let results = [
        run(
            1,
            "unique balanced ideal of A2 and its Ω Betti numbers",
            secs(1),
            criterion_1,
        ),
        run(2, "short elements are small", secs(60), criterion_2),
        run(3, "incidence family, n = 3..7", secs(90), criterion_3),
        run(4, "principal family, n = 2, 3", secs(60), criterion_4),
        run(5, "homotopy distinction, j = 1", secs(60), criterion_5),
        run(
            6,
            "homology splitting and quotient Euler characteristic",
            secs(60),
            criterion_6,
        ),
        run(7, "order-engine oracles", secs(60), criterion_7),
        run(8, "bipartite longest-element words", secs(10), criterion_8),
        run(9, "Borel–Weil–Bott", secs(10), criterion_9),
        run(
            10,
            "determinism of balanced-ideal enumeration",
            secs(30),
            criterion_10,
        ),
    ];
    let count = |o: Outcome| results.iter().filter(|&&r| r == o).count();
    let strict = std::env::var("WEYLKIT_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    println!(
        "acceptance: {}/{} criteria passed, {} failed on known-unattainable checks only, {} failed",
        count(Outcome::Pass),
        results.len(),
        count(Outcome::KnownFail),
        count(Outcome::Fail)
    );
    if count(Outcome::Fail) > 0 || (strict && count(Outcome::KnownFail) > 0) {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
