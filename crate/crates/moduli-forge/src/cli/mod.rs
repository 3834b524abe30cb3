//! Command-line front end: subcommands dispatching to every analyzer,
//! an expression grammar for exact inputs, and deterministic JSON reports.
//!
//! Exit codes: 0 all certified / affirmative verdict, 1 sound negative
//! verdict (not equivalent, unclassified, empty census), 2 input error,
//! 3 failed certificate. The `MODULI_FORGE_THREADS` environment variable
//! caps internal parallelism.

pub mod parse;
pub mod report;

pub use parse::{parse_element, parse_expr, Element, Expr};
pub use report::{exit_code, Report};

use crate::error::{Error, Result};
use crate::evidence::Certificate;
use crate::exact::{Field, Rat, RatFunc, Ring};
use crate::finite_groups::{
    classes_connected, enumerate_smooth_epis, hurwitz_move, CensusMode, HurwitzMove,
};
use crate::homology::{
    classify_quadratic, classify_rational, classify_symbolic, homology_genus,
    homology_group_check, homology_moduli_report, legendre_cover_check,
};
use crate::kft::{
    branch_sign_flip_record, fermat_check, hyperelliptic_boundary, kft_branch_data,
    kft_companions, kft_curve, kft_equivalent, kft_group_check, kft_invariants,
    kft_moduli_field, kft_separation_record, klein_automorphism_check, q_invariance_check,
    singular_witness, smooth_candidate_record, AlgValue, BranchSign,
};
use crate::moebius::{anharmonic_orbit, j_invariant};
use crate::signatures::{definability_report, rh_genus, rh_relation_holds, DefinabilityCase, Signature};
use clap::{Args, Parser, Subcommand};
use std::ffi::OsString;
use std::time::Instant;

/// Exact-arithmetic verdicts on fields of moduli of Riemann surfaces.
#[derive(Parser, Debug)]
#[command(name = "moduli-forge", version, about)]
pub struct Cli {
    /// Also print a human-readable summary to standard error.
    #[arg(long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a genus-zero signature into definability cases.
    Classify(SignatureArg),
    /// Genus of a smooth quotient cover (exact Riemann-Hurwitz).
    RhGenus {
        #[command(flatten)]
        sig: SignatureArg,
        /// Order of the covering group.
        #[arg(long)]
        order: u64,
    },
    /// j-invariant and anharmonic orbit of a parameter.
    Jfun(LambdaArg),
    /// The quartic family with the symmetric-group S4 action.
    #[command(subcommand)]
    Kft(KftCommand),
    /// Homology covers of four-point genus-zero orbifolds.
    #[command(subcommand)]
    Homology(HomologyCommand),
    /// Generating-vector censuses onto small symmetric groups.
    #[command(subcommand)]
    Groups(GroupsCommand),
}

#[derive(Args, Debug)]
pub struct SignatureArg {
    /// Signature as genus,k1,k2,...; cone orders >= 2 (e.g. 0,2,2,2,3).
    #[arg(long)]
    pub signature: String,
}

#[derive(Args, Debug)]
pub struct LambdaArg {
    /// Exact expression: integers, + - * / ^, sqrt(n), lambda.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Subcommand, Debug)]
pub enum KftCommand {
    /// The quartic of a family member, with its smoothness flag.
    Curve(LambdaArg),
    /// The invariants (G, j2, j3, j4, j22) of a member.
    Invariants(LambdaArg),
    /// Branch data (l1, l2, mu) with consistency certificates.
    Branch {
        #[command(flatten)]
        lambda: LambdaArg,
        /// Branch of the square root of lambda^2 - lambda - 2.
        #[arg(long, value_parser = ["plus", "minus"], default_value = "plus")]
        sign: String,
    },
    /// The companion parameters sharing the G-fiber.
    Companions(LambdaArg),
    /// Conformal/anticonformal equivalence of two members.
    Equivalent {
        /// First parameter.
        #[arg(long, allow_hyphen_values = true)]
        lambda1: String,
        /// Second parameter.
        #[arg(long, allow_hyphen_values = true)]
        lambda2: String,
    },
    /// Field of moduli of a member.
    Moduli(LambdaArg),
    /// The full symbolic certificate battery for the family.
    Certify,
}

#[derive(Subcommand, Debug)]
pub enum HomologyCommand {
    /// Genus of the homology cover of an (0;a,a,a,a) orbifold.
    Genus {
        /// Common cone order a >= 2.
        #[arg(short, long)]
        a: u64,
    },
    /// Certificates for the coordinate-scaling action (and, for a = 2,
    /// the full Legendre-cover bundle).
    Certify {
        /// Common cone order a >= 2.
        #[arg(short, long, default_value_t = 2)]
        a: u64,
    },
    /// Field of moduli Q(j(lambda)) of a homology cover.
    Moduli(LambdaArg),
}

#[derive(Subcommand, Debug)]
pub enum GroupsCommand {
    /// Enumerate generating-vector classes for a signature.
    Census(CensusArgs),
    /// Action of the braid-type moves on the census classes.
    Moves(CensusArgs),
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[command(flatten)]
    pub sig: SignatureArg,
    /// Degree of the target symmetric group (2..=5).
    #[arg(long)]
    pub sym: usize,
    /// Restrict to the presentation-normalized tuples
    /// (third entry (1 3)(2 4), first-three product of order 3).
    #[arg(long)]
    pub normalized: bool,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => exit_code::INPUT,
            };
            let _ = e.print();
            return code;
        }
    };
    let started = Instant::now();
    let name = command_name(&cli.command);
    let mut report = dispatch(&cli.command).unwrap_or_else(|e| Report::input_error(&name, &e));
    report.command = name;
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    print!("{}", report.to_json());
    if cli.verbose {
        eprint!("{}", report.human_summary());
    }
    report.exit_code
}

fn command_name(cmd: &Command) -> String {
    match cmd {
        Command::Classify(_) => "classify".into(),
        Command::RhGenus { .. } => "rh-genus".into(),
        Command::Jfun(_) => "jfun".into(),
        Command::Kft(k) => match k {
            KftCommand::Curve(_) => "kft curve".into(),
            KftCommand::Invariants(_) => "kft invariants".into(),
            KftCommand::Branch { .. } => "kft branch".into(),
            KftCommand::Companions(_) => "kft companions".into(),
            KftCommand::Equivalent { .. } => "kft equivalent".into(),
            KftCommand::Moduli(_) => "kft moduli".into(),
            KftCommand::Certify => "kft certify".into(),
        },
        Command::Homology(h) => match h {
            HomologyCommand::Genus { .. } => "homology genus".into(),
            HomologyCommand::Certify { .. } => "homology certify".into(),
            HomologyCommand::Moduli(_) => "homology moduli".into(),
        },
        Command::Groups(g) => match g {
            GroupsCommand::Census(_) => "groups census".into(),
            GroupsCommand::Moves(_) => "groups moves".into(),
        },
    }
}

fn dispatch(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Classify(sig) => handle_classify(&sig.signature),
        Command::RhGenus { sig, order } => handle_rh_genus(&sig.signature, *order),
        Command::Jfun(arg) => handle_jfun(&arg.lambda),
        Command::Kft(k) => match k {
            KftCommand::Curve(arg) => handle_kft_curve(&arg.lambda),
            KftCommand::Invariants(arg) => handle_kft_invariants(&arg.lambda),
            KftCommand::Branch { lambda, sign } => handle_kft_branch(&lambda.lambda, sign),
            KftCommand::Companions(arg) => handle_kft_companions(&arg.lambda),
            KftCommand::Equivalent { lambda1, lambda2 } => {
                handle_kft_equivalent(lambda1, lambda2)
            }
            KftCommand::Moduli(arg) => handle_kft_moduli(&arg.lambda),
            KftCommand::Certify => handle_kft_certify(),
        },
        Command::Homology(h) => match h {
            HomologyCommand::Genus { a } => handle_homology_genus(*a),
            HomologyCommand::Certify { a } => handle_homology_certify(*a),
            HomologyCommand::Moduli(arg) => handle_homology_moduli(&arg.lambda),
        },
        Command::Groups(g) => match g {
            GroupsCommand::Census(args) => handle_groups_census(args),
            GroupsCommand::Moves(args) => handle_groups_moves(args),
        },
    }
}

/// Runs a block with the parsed element bound at its concrete field type.
macro_rules! with_element {
    ($elem:expr, |$x:ident| $body:block) => {
        match $elem {
            Element::Rational($x) => $body,
            Element::Quadratic($x) => $body,
            Element::Symbolic($x) => $body,
            Element::SymbolicQuadratic($x) => $body,
        }
    };
}

/// Parses `genus,k1,k2,...`.
fn parse_signature(text: &str) -> Result<Signature> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() < 2 {
        return Err(Error::Domain(format!(
            "signature '{text}' needs a genus and at least one cone order"
        )));
    }
    let genus: u32 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::Domain(format!("bad genus '{}'", parts[0])))?;
    let orders = parts[1..]
        .iter()
        .map(|p| {
            p.trim()
                .parse::<u64>()
                .map_err(|_| Error::Domain(format!("bad cone order '{p}'")))
        })
        .collect::<Result<Vec<u64>>>()?;
    Signature::new(genus, orders)
}

fn handle_classify(text: &str) -> Result<Report> {
    let sig = parse_signature(text)?;
    let verdict = definability_report(&sig);
    let mut r = Report::new("classify");
    r.input("signature", sig.to_string());
    r.verdict("case", verdict.case.as_str());
    r.verdict(
        "extension_degree_bound",
        verdict
            .extension_degree_bound
            .map_or_else(|| "unknown".into(), |b| b.to_string()),
    );
    for c in &verdict.citations {
        r.cite(c.clone());
    }
    if sig.genus() == 0 && (sig.orders() == [2, 3, 8] || sig.orders() == [2, 4, 8]) {
        r.note(
            "the 96-automorphism genus-3 curve has quotient signature (0;2,3,8): \
             at group order 96 the covering relation gives genus 3 for (0;2,3,8) \
             but genus 7 for (0;2,4,8)",
        );
    }
    if verdict.case == DefinabilityCase::Unclassified {
        r.exit_code = exit_code::NEGATIVE;
    }
    Ok(r)
}

fn handle_rh_genus(text: &str, order: u64) -> Result<Report> {
    let sig = parse_signature(text)?;
    let genus = rh_genus(&sig, order)?;
    let mut r = Report::new("rh-genus");
    r.input("signature", sig.to_string());
    r.input("order", order.to_string());
    r.verdict("genus", genus.to_string());
    r.certificates.push(if rh_relation_holds(&sig, order, genus) {
        Certificate::pass(
            "covering relation",
            "2g - 2 = N (n - 2 - sum 1/k_i) re-checked exactly",
        )
    } else {
        Certificate::fail("covering relation", "exact re-check failed")
    });
    if !r.certificates[0].status.passed() {
        r.exit_code = exit_code::CERT_FAIL;
    }
    Ok(r)
}

fn handle_jfun(lambda_text: &str) -> Result<Report> {
    let elem = parse_element(lambda_text)?;
    let mut r = Report::new("jfun");
    r.input("lambda", elem.canonical());
    r.input("field", elem.field_tag());
    with_element!(&elem, |x| {
        let j = j_invariant(x)?;
        let orbit = anharmonic_orbit(x)?;
        r.verdict("j", j.to_string());
        r.verdict("orbit_size", orbit.len().to_string());
        r.listing("orbit", orbit.iter().map(|v| v.to_string()).collect());
    });
    r.cite("the j-invariant (1 - lambda + lambda^2)^3 / (lambda^2 (lambda - 1)^2) is constant on orbits of the anharmonic group");
    Ok(r)
}

fn handle_kft_curve(lambda_text: &str) -> Result<Report> {
    let elem = parse_element(lambda_text)?;
    let mut r = Report::new("kft curve");
    r.input("lambda", elem.canonical());
    r.input("field", elem.field_tag());
    with_element!(&elem, |x| {
        let curve = kft_curve(x.clone());
        r.verdict("quartic", curve.quartic.to_string());
        r.verdict("smooth", if curve.smooth { "true" } else { "false" });
        if !curve.smooth {
            r.note("the parameter lies in the singular set {-2, -1, 2}");
        }
    });
    if let Some(v) = to_alg_value(&elem) {
        if let Some(e) = crate::kft::points::exceptional_member(&v) {
            r.note(format!(
                "exceptional member: this is {}'s curve",
                e.curve_kind()
            ));
        }
    }
    Ok(r)
}

fn handle_kft_invariants(lambda_text: &str) -> Result<Report> {
    let elem = parse_element(lambda_text)?;
    let mut r = Report::new("kft invariants");
    r.input("lambda", elem.canonical());
    r.input("field", elem.field_tag());
    with_element!(&elem, |x| {
        let inv = kft_invariants(x)?;
        r.verdict("G", inv.g.to_string());
        r.verdict("j2", inv.j2.to_string());
        r.verdict("j3", inv.j3.to_string());
        r.verdict("j4", inv.j4.to_string());
        r.verdict("j22", inv.j22.to_string());
    });
    r.cite("G is the trace of the order-3 branch pair; j2, j3, j4, j22 are the j-invariants of the four genus-one quotient orbifolds");
    Ok(r)
}

fn parse_branch_sign(sign: &str) -> BranchSign {
    if sign == "minus" {
        BranchSign::Minus
    } else {
        BranchSign::Plus
    }
}

fn handle_kft_branch(lambda_text: &str, sign: &str) -> Result<Report> {
    let elem = parse_element(lambda_text)?;
    let sign = parse_branch_sign(sign);
    let mut r = Report::new("kft branch");
    r.input("lambda", elem.canonical());
    r.input("field", elem.field_tag());
    r.input("sign", sign.as_str());
    match &elem {
        Element::Rational(x) => branch_into(&mut r, x, sign)?,
        Element::Quadratic(x) => branch_into(&mut r, x, sign)?,
        Element::Symbolic(x) => branch_into(&mut r, x, sign)?,
        Element::SymbolicQuadratic(_) => {
            return Err(Error::Domain(
                "branch data over a quadratic extension of Q(lambda) is unsupported; \
                 use a rational, quadratic or symbolic parameter"
                    .into(),
            ))
        }
    }
    Ok(r)
}

fn branch_into<F: Field>(r: &mut Report, lambda: &F, sign: BranchSign) -> Result<()> {
    let data = kft_branch_data(lambda, sign)?;
    r.verdict("l1", data.l1.to_string());
    r.verdict("l2", data.l2.to_string());
    r.verdict("mu", data.mu.to_string());
    r.absorb(data.record);
    r.absorb(branch_sign_flip_record(lambda)?);
    Ok(())
}

fn handle_kft_companions(lambda_text: &str) -> Result<Report> {
    let elem = parse_element(lambda_text)?;
    let mut r = Report::new("kft companions");
    r.input("lambda", elem.canonical());
    r.input("field", elem.field_tag());
    match &elem {
        Element::Rational(x) => {
            companions_into(&mut r, x)?;
            specialize_rational_companions(&mut r, x)?;
        }
        Element::Quadratic(x) => companions_into(&mut r, x)?,
        Element::Symbolic(x) => companions_into(&mut r, x)?,
        Element::SymbolicQuadratic(_) => {
            return Err(Error::Domain(
                "companions over a quadratic extension of Q(lambda) are unsupported; \
                 use a rational, quadratic or symbolic parameter"
                    .into(),
            ))
        }
    }
    Ok(r)
}

fn companions_into<F: Field>(r: &mut Report, lambda: &F) -> Result<()> {
    let comps = kft_companions(lambda)?;
    r.verdict("lambda2", comps.lambda2.to_string());
    r.verdict("lambda3", comps.lambda3.to_string());
    r.absorb(comps.record);
    r.note("lambda2 carries the minus sign in front of the square root; the pair {lambda2, lambda3} is the invariant object");
    Ok(())
}

/// For rational parameters whose discriminant `lambda^2 - 4` is a rational
/// square the companions are rational; list them and flag family-boundary
/// values.
fn specialize_rational_companions(r: &mut Report, lambda: &Rat) -> Result<()> {
    let four = Rat::from_int(4);
    let disc = lambda.mul(lambda).sub(&four);
    let Some(root) = rat_sqrt(&disc) else {
        return Ok(());
    };
    let two = Rat::from_int(2);
    let head = Rat::from_int(6)
        .add(&Rat::from_int(5).mul(lambda))
        .add(&lambda.mul(lambda));
    let tail = Rat::one().add(lambda).mul(&root);
    let den = two.mul(&two.add(lambda));
    let l2 = head.sub(&tail).checked_div(&den)?.neg();
    let l3 = head.add(&tail).checked_div(&den)?.neg();
    r.listing(
        "companion_values",
        vec![l2.to_string(), l3.to_string()],
    );
    for v in [&l2, &l3] {
        if [-2i64, -1, 2].iter().any(|&n| *v == Rat::from_int(n)) {
            let h = hyperelliptic_boundary()?;
            r.note(format!(
                "companion value {v} lies outside the smooth family; the boundary belongs to the hyperelliptic genus-{} curve {} with automorphism group of order {} and quotient signature {}",
                h.genus, h.curve, h.automorphism_order, h.signature
            ));
        }
    }
    Ok(())
}

/// Exact square root in Q, if one exists.
fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    (&sn * &sn == *n && &sd * &sd == *d)
        .then(|| Rat::new(sn, sd).expect("positive denominator"))
}

fn to_alg_value(elem: &Element) -> Option<AlgValue> {
    match elem {
        Element::Rational(r) => Some(AlgValue::Rational(r.clone())),
        Element::Quadratic(q) => Some(AlgValue::Quadratic(q.clone())),
        _ => None,
    }
}

fn handle_kft_equivalent(l1: &str, l2: &str) -> Result<Report> {
    let e1 = parse_element(l1)?;
    let e2 = parse_element(l2)?;
    let (Some(v1), Some(v2)) = (to_alg_value(&e1), to_alg_value(&e2)) else {
        return Err(Error::Domain(
            "equivalence decisions need concrete algebraic parameters; \
             symbolic lambda has no conformal class"
                .into(),
        ));
    };
    let decision = kft_equivalent(&v1, &v2)?;
    let mut r = Report::new("kft equivalent");
    r.input("lambda1", e1.canonical());
    r.input("lambda2", e2.canonical());
    r.verdict(
        "conformally_equivalent",
        if decision.conformal { "true" } else { "false" },
    );
    r.verdict(
        "anticonformally_equivalent",
        if decision.anticonformal { "true" } else { "false" },
    );
    r.verdict("reason", decision.reason.clone());
    r.cite("generic members are conformally equivalent only at equal parameters and anticonformally equivalent only at conjugate parameters; the exceptional set is {0, 3(-1+sqrt(-7))/2, 3(-1-sqrt(-7))/2}");
    if !decision.conformal && !decision.anticonformal {
        r.exit_code = exit_code::NEGATIVE;
    }
    Ok(r)
}

fn handle_kft_moduli(lambda_text: &str) -> Result<Report> {
    let elem = parse_element(lambda_text)?;
    let mut r = Report::new("kft moduli");
    r.input("lambda", elem.canonical());
    r.input("field", elem.field_tag());
    match (&elem, to_alg_value(&elem)) {
        (_, Some(v)) => {
            let m = kft_moduli_field(&v)?;
            r.verdict("field_of_moduli", m.descriptor.clone());
            if let Some(p) = &m.min_poly {
                r.verdict("lambda_min_poly", p.clone());
            }
            r.note(m.note.clone());
        }
        (Element::Symbolic(f), _) => {
            if f.as_constant().is_some() {
                unreachable!("constants classify as rational");
            }
            r.verdict("field_of_moduli", format!("Q({f})"));
            r.note("transcendental member: the field of moduli is the rational function field generated by the parameter");
        }
        (Element::SymbolicQuadratic(_), _) => {
            return Err(Error::Domain(
                "moduli fields over a quadratic extension of Q(lambda) are unsupported".into(),
            ))
        }
        (Element::Rational(_) | Element::Quadratic(_), None) => unreachable!(),
    }
    r.cite("off the exceptional set the field of moduli of a family member is Q(lambda); on it the curve is definable over Q");
    Ok(r)
}

fn handle_kft_certify() -> Result<Report> {
    let lam = RatFunc::var();
    let mut r = Report::new("kft certify");
    r.input("lambda", "lambda (symbolic)");
    r.absorb(kft_group_check(&lam)?);
    r.absorb(q_invariance_check(&lam)?);
    let data = kft_branch_data(&lam, BranchSign::Plus)?;
    r.verdict("mu", data.mu.to_string());
    r.absorb(data.record);
    r.absorb(branch_sign_flip_record(&lam)?);
    let comps = kft_companions(&lam)?;
    r.verdict("lambda2", comps.lambda2.to_string());
    r.absorb(comps.record);
    r.absorb(kft_separation_record()?);
    r.absorb(klein_automorphism_check()?);
    r.absorb(fermat_check()?);
    for boundary in [-2i64, -1, 2] {
        r.absorb(singular_witness(boundary)?);
    }
    r.absorb(smooth_candidate_record(&Rat::one()));
    r.note("all identities verified with symbolic lambda over exact arithmetic; specialization to any smooth member follows");
    r.note("the quotient map Q has degree 24 by an intersection-theoretic count; that count is taken as given and is not certified here");
    Ok(r)
}

fn handle_homology_genus(a: u64) -> Result<Report> {
    let genus = homology_genus(a)?;
    let mut r = Report::new("homology genus");
    r.input("a", a.to_string());
    r.verdict("genus", genus.to_string());
    r.certificates.push(Certificate::pass(
        "closed form",
        format!("1 + a^2 (a - 2) = {genus} agrees with the covering relation at group order a^3"),
    ));
    Ok(r)
}

fn handle_homology_certify(a: u64) -> Result<Report> {
    if a < 2 {
        return Err(Error::Domain(format!("cone order {a} must be >= 2")));
    }
    if a > 6 {
        return Err(Error::Domain(format!(
            "cone order {a} exceeds the desk-scale cap 6 for the closure enumeration"
        )));
    }
    let mut r = Report::new("homology certify");
    r.input("a", a.to_string());
    r.absorb(homology_group_check(a as usize)?);
    if a == 2 {
        r.absorb(legendre_cover_check()?);
        r.note("for a = 2 the homology cover is the Legendre elliptic curve; the lifted involution group and the degree-four quotient map are certified above");
    }
    r.verdict("genus", homology_genus(a)?.to_string());
    Ok(r)
}

fn handle_homology_moduli(lambda_text: &str) -> Result<Report> {
    let elem = parse_element(lambda_text)?;
    let mut r = Report::new("homology moduli");
    r.input("lambda", elem.canonical());
    r.input("field", elem.field_tag());
    match &elem {
        Element::Rational(x) => {
            let rep = homology_moduli_report(x, &|j| classify_rational(j))?;
            fill_moduli(&mut r, rep.j.to_string(), rep.descriptor, rep.j_min_poly, rep.orbit.iter().map(|v| v.to_string()).collect());
        }
        Element::Quadratic(x) => {
            let rep = homology_moduli_report(x, &|j| classify_quadratic(j))?;
            fill_moduli(&mut r, rep.j.to_string(), rep.descriptor, rep.j_min_poly, rep.orbit.iter().map(|v| v.to_string()).collect());
        }
        Element::Symbolic(x) => {
            let rep = homology_moduli_report(x, &|j| classify_symbolic(j))?;
            fill_moduli(&mut r, rep.j.to_string(), rep.descriptor, rep.j_min_poly, rep.orbit.iter().map(|v| v.to_string()).collect());
        }
        Element::SymbolicQuadratic(x) => {
            let rep = homology_moduli_report(x, &|j| {
                (format!("Q(j(lambda)) with j(lambda) = {j}"), None)
            })?;
            fill_moduli(&mut r, rep.j.to_string(), rep.descriptor, rep.j_min_poly, rep.orbit.iter().map(|v| v.to_string()).collect());
        }
    }
    r.note("the branch values 0 and 1 are excluded: the four cone points infinity, 0, 1, lambda must be distinct");
    r.cite("uniqueness of the maximal abelian action on a homology cover pins the parameter up to the anharmonic group, so the field of moduli is Q(j(lambda))");
    Ok(r)
}

fn fill_moduli(
    r: &mut Report,
    j: String,
    descriptor: String,
    min_poly: Option<String>,
    orbit: Vec<String>,
) {
    r.verdict("j", j);
    r.verdict("field_of_moduli", descriptor);
    if let Some(p) = min_poly {
        r.verdict("j_min_poly", p);
    }
    r.verdict("orbit_size", orbit.len().to_string());
    r.listing("orbit", orbit);
}

fn handle_groups_census(args: &CensusArgs) -> Result<Report> {
    let sig = parse_signature(&args.sig.signature)?;
    let mode = if args.normalized {
        CensusMode::NormalizedS4
    } else {
        CensusMode::UpToConjugation
    };
    let vectors = enumerate_smooth_epis(&sig, args.sym, mode)?;
    let mut r = Report::new("groups census");
    r.input("signature", sig.to_string());
    r.input("sym", args.sym.to_string());
    r.input(
        "mode",
        if args.normalized {
            "normalized"
        } else {
            "up-to-conjugation"
        },
    );
    r.verdict("count", vectors.len().to_string());
    r.listing(
        "solutions",
        vectors.iter().map(|v| v.to_string()).collect(),
    );
    if args.normalized {
        r.note("solutions as generator words: (B, ABA^-1), (ABA^-1, (BA)B(BA)^-1), ((BA)B(BA)^-1, B), each with third entry A^2 and fourth entry BA, for A = (1 2 3 4), B = (1 2)");
    } else if sig.orders() == [2, 2, 2, 3] && args.sym == 4 {
        r.note("the unnormalized classes split by which of the three order-2 slots carries the double transposition; the presentation normalization selects the classes with it in the third slot");
    }
    if vectors.is_empty() {
        r.exit_code = exit_code::NEGATIVE;
        r.note("no smooth epimorphism exists for this signature and target");
    }
    Ok(r)
}

fn handle_groups_moves(args: &CensusArgs) -> Result<Report> {
    let sig = parse_signature(&args.sig.signature)?;
    if sig.orders().len() != 4 {
        return Err(Error::Domain(
            "moves are defined on four-point generating vectors".into(),
        ));
    }
    let mode = if args.normalized {
        CensusMode::NormalizedS4
    } else {
        CensusMode::UpToConjugation
    };
    let vectors = enumerate_smooth_epis(&sig, args.sym, mode)?;
    let mut r = Report::new("groups moves");
    r.input("signature", sig.to_string());
    r.input("sym", args.sym.to_string());
    r.input(
        "mode",
        if args.normalized {
            "normalized"
        } else {
            "up-to-conjugation"
        },
    );
    r.verdict("count", vectors.len().to_string());
    if vectors.is_empty() {
        r.exit_code = exit_code::NEGATIVE;
        return Ok(r);
    }
    r.listing(
        "classes",
        vectors
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{}: {v}", i + 1))
            .collect(),
    );
    let mut table = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        for mv in [HurwitzMove::Y, HurwitzMove::Z, HurwitzMove::W] {
            let image = hurwitz_move(v, mv)?;
            let target = vectors
                .iter()
                .position(|w| w.same_class_as(&image))
                .map_or_else(|| "outside the listed set".into(), |j| (j + 1).to_string());
            table.push(format!("{} on {} -> {}", mv.as_str(), i + 1, target));
        }
    }
    r.listing("moves", table);
    let orbits = classes_connected(&vectors)?;
    r.verdict("orbit_count", orbits.len().to_string());
    r.listing(
        "orbits",
        orbits
            .iter()
            .map(|o| {
                let names: Vec<String> = o.iter().map(|i| (i + 1).to_string()).collect();
                format!("{{{}}}", names.join(", "))
            })
            .collect(),
    );
    Ok(r)
}
