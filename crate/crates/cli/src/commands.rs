use std::fs;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use weylkit::bbw::{bbw_cohomology, classify_weight, sheaf_cohomology_cases, IntegralWeight};
use weylkit::bruhat::{enumerate_balanced, verify_short_small, EnumerationOptions, IdealDoc};
use weylkit::cartan::{parse_type, CartanType, Family};
use weylkit::families::{
    incidence_ideal, lower_half_ideal, lower_half_with_selection, principal_2n_ideal, rank_leq,
    FamilyIdeal, TypeA, Verify,
};
use weylkit::topology::{
    coset_ranks, euler_omega, flag_poincare, hausdorff_bound, homotopy_distinction,
    omega2n_closed_form, omega_betti, quotient_homology, splitting_check, thickening_ranks,
    GradedRanks,
};
use weylkit::{BruhatOrder, Elem, Error, Ideal, Parabolic, WeylGroup, Word};

use crate::args::{Cli, Command, FamilyCommand, PoincareKind};

const DEFAULT_GROUP_MAX_ORDER: usize = 51_840;
const DEFAULT_FAMILY_MAX_ORDER: usize = weylkit::families::DEFAULT_FAMILY_MAX_ORDER;
const DEFAULT_BALANCED_MAX_ORDER: usize = weylkit::bruhat::DEFAULT_ENUMERATION_MAX_ORDER;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Verification(String),
    Budget(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification { .. } | Error::InexactDivision => {
                CliError::Verification(e.to_string())
            }
            Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// Output of a command; `failure` names a theorem whose check did not hold.
pub struct Report {
    pub command: &'static str,
    pub fields: Map<String, Value>,
    pub failure: Option<String>,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            fields: Map::new(),
            failure: None,
        }
    }

    fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    fn check(&mut self, theorem: &str, holds: bool) {
        let checks = self
            .fields
            .entry("checks")
            .or_insert_with(|| Value::Object(Map::new()));
        checks
            .as_object_mut()
            .expect("checks is an object")
            .insert(theorem.to_string(), Value::Bool(holds));
        if !holds && self.failure.is_none() {
            self.failure = Some(theorem.to_string());
        }
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("schema".into(), json!(1));
        out.insert("command".into(), json!(self.command));
        out.extend(self.fields.clone());
        Value::Object(out)
    }
}

type CmdResult = Result<Report, CliError>;

pub fn run(cli: &Cli) -> CmdResult {
    let limit = |default: usize| cli.max_order.unwrap_or(default);
    let verify = if cli.verify {
        Verify::Always
    } else {
        Verify::Auto
    };
    match &cli.command {
        Command::Group { cartan } => group(cartan, limit(DEFAULT_GROUP_MAX_ORDER)),
        Command::Balanced {
            cartan,
            right_invariant,
            serial,
        } => balanced(
            cartan,
            right_invariant.as_deref(),
            *serial,
            limit(DEFAULT_BALANCED_MAX_ORDER),
        ),
        Command::Family { family } => family_cmd(family, verify, limit(DEFAULT_FAMILY_MAX_ORDER)),
        Command::Betti {
            cartan,
            ideal,
            domain,
            genus,
        } => betti(
            cartan,
            ideal,
            domain,
            *genus,
            verify,
            limit(DEFAULT_GROUP_MAX_ORDER),
        ),
        Command::Poincare { kind, value } => {
            poincare(*kind, *value, cli.verify, limit(DEFAULT_FAMILY_MAX_ORDER))
        }
        Command::Bbw {
            cartan,
            weight,
            k,
            cd,
        } => bbw(cartan, weight, *k, *cd, limit(DEFAULT_GROUP_MAX_ORDER)),
        Command::Small {
            cartan,
            max_len,
            expect_all_small,
        } => small(
            cartan,
            *max_len as usize,
            *expect_all_small,
            limit(DEFAULT_GROUP_MAX_ORDER),
        ),
        Command::Hausdorff {
            cartan,
            ideal,
            domain,
            curve_dim,
        } => hausdorff(
            cartan,
            ideal,
            domain,
            *curve_dim,
            verify,
            limit(DEFAULT_GROUP_MAX_ORDER),
        ),
        Command::Distinct { j } => distinct(*j, limit(DEFAULT_FAMILY_MAX_ORDER)),
        Command::Oracle {
            cartan,
            seed,
            samples,
        } => oracle(cartan, *seed, *samples, limit(DEFAULT_GROUP_MAX_ORDER)),
    }
}

fn cartan_type(s: &str, max_order: usize) -> Result<CartanType, CliError> {
    let t = parse_type(s)?;
    let needed = t.weyl_order();
    if needed > max_order as u64 {
        return Err(Error::BudgetExceeded {
            what: "Weyl group order",
            needed,
            budget: max_order as u64,
        }
        .into());
    }
    Ok(t)
}

/// `S_n` when the type is `A_{n−1}`.
fn type_a_rank(t: &CartanType) -> Option<usize> {
    match t.factors() {
        [f] if f.family == Family::A => Some(f.rank + 1),
        _ => None,
    }
}

/// A Bruhat order, with the permutation model when the type is `A_{n−1}`.
enum Setup {
    Plain(BruhatOrder),
    TypeA(TypeA),
}

impl Setup {
    fn new(t: &CartanType, max_order: usize) -> Result<Self, CliError> {
        Ok(match type_a_rank(t) {
            Some(n) => Setup::TypeA(TypeA::with_max_order(n, max_order)?),
            None => Setup::Plain(BruhatOrder::of_type(t)?),
        })
    }

    fn order(&self) -> &BruhatOrder {
        match self {
            Setup::Plain(o) => o,
            Setup::TypeA(a) => a.order(),
        }
    }

    fn group(&self) -> &WeylGroup {
        self.order().group()
    }

    fn type_a(&self) -> Result<&TypeA, CliError> {
        match self {
            Setup::TypeA(a) => Ok(a),
            Setup::Plain(o) => Err(CliError::Usage(format!(
                "this family is defined for type A only, not {}",
                o.group().cartan_type()
            ))),
        }
    }

    /// JSON description of an element: its word and, in type A, its
    /// one-line permutation.
    fn describe(&self, x: Elem) -> Value {
        let word = self.group().reduced_word(x);
        match self {
            Setup::TypeA(a) => json!({"word": word, "permutation": a.perm(x).to_string()}),
            Setup::Plain(_) => json!({"word": word}),
        }
    }
}

fn parse_gens(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("bad generator index `{t}`")))
        })
        .collect()
}

fn parse_word(s: &str) -> Result<Vec<usize>, CliError> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(|c: char| c == '.' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("bad letter `{t}` in word `{s}`")))
        })
        .collect()
}

fn parse_elements(g: &WeylGroup, s: &str) -> Result<Vec<Elem>, CliError> {
    s.split(';')
        .map(|w| Ok(g.try_evaluate(&parse_word(w)?)?))
        .collect()
}

fn words(g: &WeylGroup, elems: &[Elem]) -> Vec<Word> {
    elems.iter().map(|&x| g.reduced_word(x)).collect()
}

fn resolve_ideal(setup: &Setup, spec: &str, verify: Verify) -> Result<Ideal, CliError> {
    let order = setup.order();
    if let Some(name) = spec.strip_prefix("family:") {
        let f = match name {
            "lower-half" => lower_half_ideal(order, verify)?,
            "incidence" => incidence_ideal(setup.type_a()?, verify)?,
            "principal-2n" => principal_2n_ideal(setup.type_a()?, verify)?,
            other => return Err(CliError::Usage(format!("unknown family `{other}`"))),
        };
        return Ok(f.ideal);
    }
    if let Some(list) = spec.strip_prefix("words:") {
        let gens = parse_elements(order.group(), list)?;
        return Ok(order.ideal_generated_by(&gens));
    }
    let text = fs::read_to_string(spec)
        .map_err(|e| CliError::Usage(format!("cannot read `{spec}`: {e}")))?;
    let doc: IdealDoc = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("bad ideal document `{spec}`: {e}")))?;
    Ok(order.ideal_from_doc(&doc)?)
}

fn group(cartan: &str, max_order: usize) -> CmdResult {
    let t = cartan_type(cartan, max_order)?;
    let g = WeylGroup::of_type(&t)?;
    let mut r = Report::new("group");
    r.set("type", t.to_string())
        .set("rank", g.rank())
        .set("order", g.order())
        .set("l_w0", g.max_length())
        .set("w0", json!(g.reduced_word(g.w0())))
        .set("lengths", json!(g.length_histogram()))
        .set("coxeter_numbers", json!(g.root_system().coxeter_numbers()));
    Ok(r)
}

fn balanced(
    cartan: &str,
    right_invariant: Option<&str>,
    serial: bool,
    max_order: usize,
) -> CmdResult {
    let t = cartan_type(cartan, max_order)?;
    let order = BruhatOrder::of_type(&t)?;
    let p = right_invariant
        .map(|s| Parabolic::build(order.group(), &parse_gens(s)?).map_err(CliError::from))
        .transpose()?;
    let opts = EnumerationOptions {
        max_order,
        parallel: !serial,
    };
    let ideals = enumerate_balanced(&order, p.as_ref(), opts)?;
    let docs = ideals
        .iter()
        .map(|i| Ok(json!({"size": i.len(), "generators": order.ideal_to_doc(i)?.generators})))
        .collect::<Result<Vec<Value>, Error>>()?;
    let mut r = Report::new("balanced");
    r.set("type", t.to_string())
        .set("right_invariant", json!(p.map(|p| p.generators().to_vec())))
        .set("count", ideals.len())
        .set("ideals", Value::Array(docs));
    Ok(r)
}

fn family_report(r: &mut Report, setup: &Setup, f: &FamilyIdeal) {
    let g = setup.group();
    r.set("type", g.cartan_type().to_string())
        .set("size", f.ideal.len())
        .set("group_order", g.order())
        .set(
            "generators",
            Value::Array(f.generators.iter().map(|&x| setup.describe(x)).collect()),
        )
        .set(
            "generator_lengths",
            json!(f
                .generators
                .iter()
                .map(|&x| g.length(x))
                .collect::<Vec<_>>()),
        );
}

fn family_cmd(cmd: &FamilyCommand, verify: Verify, max_order: usize) -> CmdResult {
    let mut r = Report::new("family");
    match cmd {
        FamilyCommand::LowerHalf { cartan } => {
            let setup = Setup::new(&cartan_type(cartan, max_order)?, max_order)?;
            let f = lower_half_ideal(setup.order(), verify)?;
            r.set("family", "lower-half");
            family_report(&mut r, &setup, &f);
        }
        FamilyCommand::LowerHalfJ { cartan, select } => {
            let setup = Setup::new(&cartan_type(cartan, max_order)?, max_order)?;
            let g = setup.group();
            let selection = match select {
                Some(s) => parse_elements(g, s)?,
                None => {
                    let k = g.max_length() / 2;
                    g.elements()
                        .filter(|&x| g.length(x) == k && x < g.w0_mul(x))
                        .collect()
                }
            };
            let f = lower_half_with_selection(setup.order(), &selection, verify)?;
            r.set("family", "lower-half-J")
                .set("selection", json!(words(g, &selection)));
            family_report(&mut r, &setup, &f);
            r.set("extra_generators", f.generators.len() - selection.len());
        }
        FamilyCommand::Incidence { n } => {
            let setup = Setup::TypeA(TypeA::with_max_order(*n, max_order)?);
            let f = incidence_ideal(setup.type_a()?, verify)?;
            r.set("family", "incidence").set("n", *n);
            family_report(&mut r, &setup, &f);
        }
        FamilyCommand::Principal2n { n } => {
            let setup = Setup::TypeA(TypeA::with_max_order(2 * n, max_order)?);
            let f = principal_2n_ideal(setup.type_a()?, verify)?;
            r.set("family", "principal-2n").set("n", *n);
            family_report(&mut r, &setup, &f);
        }
    }
    r.set("verified", verify.enabled());
    Ok(r)
}

fn betti(
    cartan: &str,
    ideal: &str,
    domain: &str,
    genus: Option<u64>,
    verify: Verify,
    max_order: usize,
) -> CmdResult {
    let t = cartan_type(cartan, max_order)?;
    let setup = Setup::new(&t, max_order)?;
    let order = setup.order();
    let g = order.group();
    let ideal = resolve_ideal(&setup, ideal, verify)?;
    let p = Parabolic::build(g, &parse_gens(domain)?)?;
    let class = order.classify(&ideal)?;
    let mut r = Report::new("betti");
    r.set("type", t.to_string())
        .set("domain", json!(p.generators()))
        .set("ideal_size", ideal.len())
        .set("classification", json!(class))
        .set("n", p.max_quotient_length())
        .set("cosets", p.num_cosets())
        .set("r", json!(coset_ranks(order, &p, &ideal)?))
        .set(
            "thickening_betti",
            json!(thickening_ranks(order, &p, &ideal)?),
        );
    let split = splitting_check(order, &p, &ideal)?;
    r.check("homology splitting", split);
    if class.slim {
        let omega = omega_betti(order, &p, &ideal)?;
        r.set("omega_betti", json!(omega));
        if class.balanced {
            r.set("euler_omega", euler_omega(order, &p, &ideal)?);
        }
        if let Some(genus) = genus {
            let q = quotient_homology(&omega, genus)?;
            let chi = q.euler_characteristic();
            r.set("genus", genus)
                .set("quotient_betti", json!(q))
                .set("euler_quotient", chi);
            r.check(
                "χ(W) = χ(S)·χ(Ω)",
                chi == (2 - 2 * genus as i64) * omega.euler_characteristic(),
            );
        }
    }
    Ok(r)
}

fn poincare(kind: PoincareKind, value: usize, verify: bool, max_order: usize) -> CmdResult {
    let mut r = Report::new("poincare");
    match kind {
        PoincareKind::Flag => {
            let p = flag_poincare(value)?;
            r.set("kind", "flag")
                .set("m", value)
                .set("value_at_1", p.eval(1));
            if verify && value >= 2 {
                let a = TypeA::with_max_order(value, max_order)?;
                let direct = GradedRanks::from_even(&a.group().length_histogram()).to_polynomial();
                r.check(
                    "flag Poincaré polynomial = length generating function",
                    direct == p,
                );
            }
            r.set("coefficients", json!(p));
        }
        PoincareKind::Omega2n => {
            let p = omega2n_closed_form(value)?;
            r.set("kind", "omega2n")
                .set("n", value)
                .set("value_at_1", p.eval(1));
            if verify {
                let a = TypeA::with_max_order(2 * value, max_order)?;
                let f = principal_2n_ideal(&a, Verify::Always)?;
                let direct = omega_betti(a.order(), &Parabolic::trivial(a.group()), &f.ideal)?;
                r.check(
                    "Ω_2n closed form = direct computation",
                    direct.to_polynomial() == p,
                );
            }
            r.set("coefficients", json!(p));
        }
    }
    Ok(r)
}

fn bbw(cartan: &str, weight: &str, k: Option<usize>, cd: usize, max_order: usize) -> CmdResult {
    let t = cartan_type(cartan, max_order)?;
    let g = WeylGroup::of_type(&t)?;
    let lambda: IntegralWeight = weight.parse()?;
    // Report w by a reduced word rather than its internal id.
    let with_word = |mut v: Value| {
        if let Some(w) = v.get("w").and_then(Value::as_u64) {
            v["w"] = json!(g.reduced_word(Elem::new(w as usize)));
        }
        v
    };
    let mut r = Report::new("bbw");
    r.set("type", t.to_string())
        .set("weight", json!(lambda))
        .set(
            "classification",
            with_word(json!(classify_weight(&g, &lambda)?)),
        )
        .set("cohomology", with_word(json!(bbw_cohomology(&g, &lambda)?)));
    if let Some(k) = k {
        r.set("sheaf", json!(sheaf_cohomology_cases(&g, &lambda, k, cd)?));
    }
    Ok(r)
}

fn small(cartan: &str, max_len: usize, expect_all_small: bool, max_order: usize) -> CmdResult {
    let t = cartan_type(cartan, max_order)?;
    let report = verify_short_small(&t, max_len)?;
    let mut r = Report::new("small");
    r.set("type", t.to_string())
        .set("max_len", max_len)
        .set("all_small", report.all_small)
        .set("predicted_all_small", json!(report.predicted_all_small))
        .set("witnesses", json!(report.witnesses));
    r.check(
        "short elements are small iff Coxeter numbers allow",
        report.agrees_with_prediction(),
    );
    if expect_all_small {
        r.check(
            "every element of length ≤ max_len is small",
            report.all_small,
        );
    }
    Ok(r)
}

fn hausdorff(
    cartan: &str,
    ideal: &str,
    domain: &str,
    curve_dim: f64,
    verify: Verify,
    max_order: usize,
) -> CmdResult {
    let t = cartan_type(cartan, max_order)?;
    let setup = Setup::new(&t, max_order)?;
    let ideal = resolve_ideal(&setup, ideal, verify)?;
    let p = Parabolic::build(setup.group(), &parse_gens(domain)?)?;
    let report = hausdorff_bound(setup.order(), &p, &ideal, curve_dim)?;
    let mut r = Report::new("hausdorff");
    r.set("type", t.to_string())
        .set("domain", json!(p.generators()))
        .set("curve_dim", curve_dim)
        .set("report", json!(report));
    Ok(r)
}

fn distinct(j: usize, max_order: usize) -> CmdResult {
    let report = homotopy_distinction(j, max_order)?;
    let mut r = Report::new("distinct");
    r.set("report", json!(report));
    r.check("b_2k(Ω_2n) < b_2k(Ω_1/2)", report.strict);
    Ok(r)
}

fn oracle(cartan: &str, seed: u64, samples: usize, max_order: usize) -> CmdResult {
    let t = cartan_type(cartan, max_order)?;
    let setup = Setup::new(&t, max_order)?;
    let order = setup.order();
    let g = order.group();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut lifting, mut subword, mut rank, mut comparable) = (0usize, 0usize, 0usize, 0usize);
    for _ in 0..samples {
        let x = Elem::new(rng.gen_range(0..g.order()));
        let y = Elem::new(rng.gen_range(0..g.order()));
        let leq = order.leq(x, y);
        comparable += leq as usize;
        lifting += (order.leq_by_lifting(x, y) != leq) as usize;
        subword += (order.leq_by_subword(x, y) != leq) as usize;
        if let Setup::TypeA(a) = &setup {
            rank += (rank_leq(a.perm(x), a.perm(y))? != leq) as usize;
        }
    }
    let inversions = g
        .elements()
        .filter(|&x| g.inversion_count(x) != g.length(x))
        .count();
    let mut r = Report::new("oracle");
    r.set("type", t.to_string())
        .set("seed", seed)
        .set("samples", samples)
        .set("comparable", comparable)
        .set(
            "mismatches",
            json!({"lifting": lifting, "subword": subword, "rank_criterion": rank, "inversions": inversions}),
        );
    r.check("order agrees with lifting property", lifting == 0);
    r.check("order agrees with subword property", subword == 0);
    r.check("order agrees with rank criterion", rank == 0);
    r.check("length = inversion count", inversions == 0);
    Ok(r)
}
