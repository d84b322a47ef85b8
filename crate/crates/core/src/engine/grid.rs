//! Statement catalog and parameter-grid sweeps.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::arith::w_identity_suite;
use crate::engine::divisibility::{cyclotomic_product_moduli, first_failure, Modulus};
use crate::engine::integrality::{conjecture_sum, int_lcm_sum, int_plain_sum, RationalSum};
use crate::engine::ring::{Cyclic, Exact, SumRing};
use crate::engine::sums::{alternating_in, general_in, plain_in, product_in};
use crate::engine::{ConjectureVariant, Sign, Status, Verdict};
use crate::error::{Error, Result};
use crate::poly::{QLaurent, XPoly};
use crate::qobjects::{lemma31_check, q_lucas_check};
use crate::wpoly::{applicable_lemma_forms, lemma_congruence_check};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    QsumPlain,
    QsumAlternating,
    QsumProduct,
    QsumGeneral,
    IntPlain,
    IntAlternating,
    IntLcm,
    Lemma23,
    Lemma31,
    LemmaQLucas,
    Conj52Even,
    Conj54Ii,
    Conj54Iii,
    IdentitySuite,
}

/// One parameter of a statement: its name, smallest legal value, and the
/// value used when no range is given.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Param {
    pub name: &'static str,
    pub min: i64,
    pub default: Option<i64>,
}

const fn req(name: &'static str, min: i64) -> Param {
    Param {
        name,
        min,
        default: None,
    }
}

const fn opt(name: &'static str, min: i64, default: i64) -> Param {
    Param {
        name,
        min,
        default: Some(default),
    }
}

const ALPHA: Param = opt("alpha", 1, 1);
const BETA: Param = opt("beta", 1, 1);
const M: Param = opt("m", 1, 1);
const R: Param = opt("r", 1, 1);

impl Statement {
    pub const ALL: [Statement; 14] = [
        Statement::QsumPlain,
        Statement::QsumAlternating,
        Statement::QsumProduct,
        Statement::QsumGeneral,
        Statement::IntPlain,
        Statement::IntAlternating,
        Statement::IntLcm,
        Statement::Lemma23,
        Statement::Lemma31,
        Statement::LemmaQLucas,
        Statement::Conj52Even,
        Statement::Conj54Ii,
        Statement::Conj54Iii,
        Statement::IdentitySuite,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::QsumPlain => "thm-qsum-plain",
            Statement::QsumAlternating => "thm-qsum-alternating",
            Statement::QsumProduct => "thm-qsum-product",
            Statement::QsumGeneral => "thm-qsum-general",
            Statement::IntPlain => "thm-int-plain",
            Statement::IntAlternating => "thm-int-alternating",
            Statement::IntLcm => "thm-int-lcm",
            Statement::Lemma23 => "lemma-23",
            Statement::Lemma31 => "lemma-31",
            Statement::LemmaQLucas => "lemma-qlucas",
            Statement::Conj52Even => "conj-52-even",
            Statement::Conj54Ii => "conj-54-ii",
            Statement::Conj54Iii => "conj-54-iii",
            Statement::IdentitySuite => "identity-suite",
        }
    }

    /// Parameters in the order that defines the grid's lexicographic order.
    pub fn params(self) -> &'static [Param] {
        match self {
            Statement::QsumPlain | Statement::QsumAlternating | Statement::QsumProduct => {
                const P: [Param; 4] = [req("n", 2), ALPHA, M, R];
                &P
            }
            Statement::QsumGeneral => {
                const P: [Param; 5] = [req("n", 2), ALPHA, BETA, M, R];
                &P
            }
            Statement::IntPlain | Statement::IntAlternating => {
                const P: [Param; 4] = [req("n", 1), ALPHA, M, R];
                &P
            }
            Statement::IntLcm => {
                const P: [Param; 5] = [req("n", 1), ALPHA, BETA, M, R];
                &P
            }
            Statement::Lemma23 => {
                const P: [Param; 4] = [req("a", 0), req("b", 0), req("d", 3), ALPHA];
                &P
            }
            Statement::Lemma31 => {
                const P: [Param; 1] = [req("d", 2)];
                &P
            }
            Statement::LemmaQLucas => {
                const P: [Param; 5] = [
                    req("d", 2),
                    req("a", 0),
                    req("b", 0),
                    req("s", 0),
                    req("t", 0),
                ];
                &P
            }
            Statement::Conj52Even => {
                const P: [Param; 3] = [req("n", 2), opt("alpha", 2, 2), M];
                &P
            }
            Statement::Conj54Ii => {
                const P: [Param; 2] = [req("n", 1), M];
                &P
            }
            Statement::Conj54Iii => {
                const P: [Param; 1] = [req("n", 2)];
                &P
            }
            Statement::IdentitySuite => {
                const P: [Param; 3] = [req("n", 1), req("m", 1), opt("b", 0, 0)];
                &P
            }
        }
    }

    pub fn status(self) -> Status {
        match self {
            Statement::Conj52Even | Statement::Conj54Ii | Statement::Conj54Iii => {
                Status::ConjectureEmpirical
            }
            _ => Status::Proved,
        }
    }

    /// Whether the statement decides a computed value against a modulus, so
    /// that a corrupted value can be injected.
    pub fn supports_fault_injection(self) -> bool {
        !matches!(
            self,
            Statement::Lemma23
                | Statement::Lemma31
                | Statement::LemmaQLucas
                | Statement::IdentitySuite
        )
    }

    pub fn catalog() -> String {
        Self::ALL
            .iter()
            .map(|s| s.id())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| Error::UnknownStatement(s.to_string(), Self::catalog()))
    }
}

/// How theorem sums are evaluated before reduction. `Cyclic` works modulo
/// `q^L - 1` for a period `L` that every tested modulus divides, which gives
/// the same residues as `Exact` at a fraction of the cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Evaluation {
    #[default]
    Cyclic,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub statement: Statement,
    /// Inclusive ranges by parameter name; missing parameters take their
    /// default. A range with `hi < lo` makes the grid empty.
    pub ranges: BTreeMap<String, (i64, i64)>,
    /// For the theorem sums: test only the cyclotomic factor belonging to
    /// this divisor of `n`, skipping cells where it does not divide `n`.
    pub divisor: Option<i64>,
    pub workers: usize,
    pub evaluation: Evaluation,
    /// Adds 1 to every computed value before it is decided.
    pub fault_injection: bool,
}

impl GridSpec {
    pub fn new(statement: Statement) -> Self {
        Self {
            statement,
            ranges: BTreeMap::new(),
            divisor: None,
            workers: 1,
            evaluation: Evaluation::default(),
            fault_injection: false,
        }
    }

    pub fn range(mut self, name: &str, lo: i64, hi: i64) -> Self {
        self.ranges.insert(name.to_string(), (lo, hi));
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn evaluation(mut self, evaluation: Evaluation) -> Self {
        self.evaluation = evaluation;
        self
    }

    pub fn divisor(mut self, d: i64) -> Self {
        self.divisor = Some(d);
        self
    }

    pub fn fault_injection(mut self, on: bool) -> Self {
        self.fault_injection = on;
        self
    }

    /// Resolved `(name, lo, hi)` per schema parameter, after validation.
    fn resolved_ranges(&self) -> Result<Vec<(&'static str, i64, i64)>> {
        let schema = self.statement.params();
        if let Some(name) = self
            .ranges
            .keys()
            .find(|k| !schema.iter().any(|p| p.name == k.as_str()))
        {
            return Err(Error::MalformedRange(format!(
                "{} has no parameter `{name}`; it takes {}",
                self.statement,
                schema.iter().map(|p| p.name).collect::<Vec<_>>().join(", ")
            )));
        }
        schema
            .iter()
            .map(|p| {
                let (lo, hi) = match (self.ranges.get(p.name), p.default) {
                    (Some(&r), _) => r,
                    (None, Some(v)) => (v, v),
                    (None, None) => {
                        return Err(Error::MalformedRange(format!(
                            "{} needs a range for `{}`",
                            self.statement, p.name
                        )))
                    }
                };
                if lo < p.min && lo <= hi {
                    return Err(Error::MalformedRange(format!(
                        "`{}` starts at {lo}, below its minimum {}",
                        p.name, p.min
                    )));
                }
                Ok((p.name, lo, hi))
            })
            .collect()
    }

    /// Every grid point in lexicographic order of the schema parameters,
    /// including points that [`cell_applies`] later skips.
    fn points(&self) -> Result<Vec<Vec<i64>>> {
        let ranges = self.resolved_ranges()?;
        let mut points = vec![Vec::new()];
        for &(_, lo, hi) in &ranges {
            points = points
                .into_iter()
                .flat_map(|p| {
                    (lo..=hi).map(move |v| {
                        let mut next = p.clone();
                        next.push(v);
                        next
                    })
                })
                .collect();
        }
        Ok(points)
    }
}

/// Cells outside a statement's domain inside an otherwise valid box are
/// skipped rather than reported: odd `n` for the even-`n` conjectures,
/// `(b, d)` pairs no lemma form covers, q-Lucas digits `b, t >= d`, `m > n`
/// in the identity suite, and divisors that do not divide `n`.
fn cell_applies(spec: &GridSpec, v: &[i64]) -> bool {
    use Statement::*;
    let divisor_ok = |n: i64| spec.divisor.is_none_or(|d| n % d == 0);
    match spec.statement {
        QsumPlain | QsumAlternating | QsumProduct | QsumGeneral => divisor_ok(v[0]),
        Conj52Even | Conj54Iii => v[0] % 2 == 0,
        Lemma23 => !applicable_lemma_forms(v[1], v[2]).is_empty(),
        LemmaQLucas => v[2] < v[0] && v[4] < v[0],
        IdentitySuite => v[1] <= v[0],
        _ => true,
    }
}

fn moduli_for(spec: &GridSpec, n: i64) -> Result<Vec<Modulus>> {
    let alternating = spec.statement == Statement::QsumAlternating;
    match spec.divisor {
        Some(d) => Ok(vec![Modulus::cyclotomic(if alternating && d % 2 == 0 {
            2 * d
        } else {
            d
        })?]),
        None if alternating => cyclotomic_product_moduli(n),
        None => Ok(vec![Modulus::q_integer(n)]),
    }
}

fn qsum_value<R: SumRing>(ring: &R, st: Statement, v: &[i64]) -> Result<QLaurent> {
    match st {
        Statement::QsumPlain => plain_in(ring, v[0], v[1], v[2], v[3]),
        Statement::QsumAlternating => alternating_in(ring, v[0], v[1], v[2], v[3]),
        Statement::QsumProduct => product_in(ring, v[0], v[1], v[2], v[3]),
        Statement::QsumGeneral => general_in(ring, v[0], v[1], v[2], v[3], v[4]),
        _ => unreachable!("not a theorem sum"),
    }
}

fn rational_value(st: Statement, v: &[i64]) -> Result<RationalSum> {
    match st {
        Statement::IntPlain => int_plain_sum(v[0], v[1], v[2], v[3], Sign::Plus),
        Statement::IntAlternating => int_plain_sum(v[0], v[1], v[2], v[3], Sign::Alternating),
        Statement::IntLcm => int_lcm_sum(v[0], v[1], v[2], v[3], v[4]),
        Statement::Conj52Even => conjecture_sum(ConjectureVariant::C52Eq14EvenN, v[0], v[1], v[2]),
        Statement::Conj54Ii => conjecture_sum(ConjectureVariant::C54Ii, v[0], 1, v[1]),
        Statement::Conj54Iii => conjecture_sum(ConjectureVariant::C54Iii, v[0], 1, 1),
        _ => unreachable!("not a rational sum"),
    }
}

fn evaluate_cell(spec: &GridSpec, v: &[i64]) -> Result<Vec<Verdict>> {
    use Statement::*;
    let st = spec.statement;
    let names: Vec<&str> = st.params().iter().map(|p| p.name).collect();
    let mut params: Vec<(&str, i64)> = names.iter().copied().zip(v.iter().copied()).collect();
    let start = Instant::now();
    let single = |witness: Option<String>, params: &[(&str, i64)]| {
        vec![Verdict::new(st.id(), params, witness, start.elapsed()).with_status(st.status())]
    };
    let verdicts = match st {
        QsumPlain | QsumAlternating | QsumProduct | QsumGeneral => {
            let n = v[0];
            let mut value = match spec.evaluation {
                Evaluation::Exact => qsum_value(&Exact, st, v)?,
                Evaluation::Cyclic => {
                    let period = if st == QsumAlternating { 2 * n } else { n };
                    qsum_value(&Cyclic::new(period)?, st, v)?
                }
            };
            if spec.fault_injection {
                value += &QLaurent::one();
            }
            if let Some(d) = spec.divisor {
                params.push(("divisor", d));
            }
            single(first_failure(&value, &moduli_for(spec, n)?)?, &params)
        }
        IntPlain | IntAlternating | IntLcm | Conj52Even | Conj54Ii | Conj54Iii => {
            let mut value = rational_value(st, v)?;
            if spec.fault_injection {
                value.numerator += &XPoly::one();
            }
            if matches!(st, Conj54Ii | Conj54Iii) {
                params.push(("alpha", 1));
            }
            if st == Conj54Iii {
                params.push(("m", 1));
            }
            single(value.witness()?, &params)
        }
        Lemma23 => lemma_congruence_check(v[0], v[1], v[2], v[3])?,
        Lemma31 => single(
            (!lemma31_check(v[0])?).then(|| "Phi_d(q^2) relation fails".to_string()),
            &params,
        ),
        LemmaQLucas => {
            let ok = q_lucas_check(v[0], v[1], v[2], v[3], v[4])?;
            single((!ok).then(|| "residues differ".to_string()), &params)
        }
        IdentitySuite => w_identity_suite(v[0], v[1], v[2])?
            .into_iter()
            .map(|rep| {
                let witness = (!rep.holds).then(|| format!("lhs {} != rhs {}", rep.lhs, rep.rhs));
                Verdict::new(
                    format!("{}/{}", st.id(), rep.id.as_str()),
                    &rep.params,
                    witness,
                    start.elapsed(),
                )
            })
            .collect(),
    };
    Ok(verdicts)
}

/// Evaluates `spec.statement` over every applicable grid cell. Verdicts come
/// back in lexicographic parameter order whatever the worker count.
pub fn grid_verify(spec: &GridSpec) -> Result<Vec<Verdict>> {
    if spec.workers == 0 {
        return Err(Error::Domain("worker count must be positive".into()));
    }
    if spec.fault_injection && !spec.statement.supports_fault_injection() {
        return Err(Error::Domain(format!(
            "{} does not support fault injection",
            spec.statement
        )));
    }
    if let Some(d) = spec.divisor {
        if !matches!(
            spec.statement,
            Statement::QsumPlain
                | Statement::QsumAlternating
                | Statement::QsumProduct
                | Statement::QsumGeneral
        ) {
            return Err(Error::Domain(format!(
                "{} does not take a divisor filter",
                spec.statement
            )));
        }
        crate::error::require_min("divisor", d, 2)?;
    }
    let cells: Vec<Vec<i64>> = spec
        .points()?
        .into_iter()
        .filter(|v| cell_applies(spec, v))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.workers)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;
    let results: Vec<Result<Vec<Verdict>>> =
        pool.install(|| cells.par_iter().map(|v| evaluate_cell(spec, v)).collect());
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::all_pass;

    #[test]
    fn catalog_round_trips() {
        for st in Statement::ALL {
            assert_eq!(st.id().parse::<Statement>().unwrap(), st);
        }
        let err = "nonexistent".parse::<Statement>().unwrap_err().to_string();
        assert!(err.contains("thm-qsum-plain") && err.contains("identity-suite"));
    }

    #[test]
    fn plain_sweep_example() {
        let v = grid_verify(&GridSpec::new(Statement::QsumPlain).range("n", 2, 6)).unwrap();
        assert_eq!(v.len(), 5);
        assert!(all_pass(&v));
        assert_eq!(
            v.iter().map(|x| x.param("n").unwrap()).collect::<Vec<_>>(),
            [2, 3, 4, 5, 6]
        );
    }

    #[test]
    fn empty_grid_passes() {
        let v = grid_verify(&GridSpec::new(Statement::QsumPlain).range("n", 6, 2)).unwrap();
        assert!(v.is_empty() && all_pass(&v));
    }

    #[test]
    fn malformed_specs_are_rejected() {
        assert!(grid_verify(&GridSpec::new(Statement::QsumPlain)).is_err());
        assert!(grid_verify(&GridSpec::new(Statement::QsumPlain).range("n", 1, 3)).is_err());
        assert!(grid_verify(
            &GridSpec::new(Statement::QsumPlain)
                .range("n", 2, 3)
                .range("beta", 1, 1)
        )
        .is_err());
        assert!(grid_verify(
            &GridSpec::new(Statement::Lemma31)
                .range("d", 2, 3)
                .fault_injection(true)
        )
        .is_err());
        assert!(grid_verify(
            &GridSpec::new(Statement::IntPlain)
                .range("n", 2, 3)
                .divisor(2)
        )
        .is_err());
    }

    #[test]
    fn fault_injection_fails_every_cell() {
        for st in [
            Statement::QsumPlain,
            Statement::QsumAlternating,
            Statement::IntLcm,
            Statement::Conj54Ii,
        ] {
            let v = grid_verify(&GridSpec::new(st).range("n", 2, 5).fault_injection(true)).unwrap();
            assert!(!v.is_empty());
            assert!(v.iter().all(|x| !x.pass && x.witness.is_some()), "{st}");
        }
    }

    #[test]
    fn cyclic_and_exact_agree_including_witnesses() {
        for st in [
            Statement::QsumPlain,
            Statement::QsumAlternating,
            Statement::QsumProduct,
            Statement::QsumGeneral,
        ] {
            for fault in [false, true] {
                let spec = GridSpec::new(st)
                    .range("n", 2, 7)
                    .range("alpha", 1, 2)
                    .fault_injection(fault);
                let strip = |v: Vec<Verdict>| -> Vec<_> {
                    v.into_iter()
                        .map(|x| (x.params, x.pass, x.witness))
                        .collect()
                };
                let cyclic = strip(grid_verify(&spec).unwrap());
                let exact =
                    strip(grid_verify(&spec.clone().evaluation(Evaluation::Exact)).unwrap());
                assert_eq!(cyclic, exact, "{st} fault={fault}");
            }
        }
    }

    #[test]
    fn skipped_cells() {
        let v = grid_verify(&GridSpec::new(Statement::Conj54Iii).range("n", 2, 7)).unwrap();
        assert_eq!(
            v.iter().map(|x| x.param("n").unwrap()).collect::<Vec<_>>(),
            [2, 4, 6]
        );
        let v = grid_verify(
            &GridSpec::new(Statement::QsumAlternating)
                .range("n", 2, 9)
                .divisor(3),
        )
        .unwrap();
        assert_eq!(
            v.iter().map(|x| x.param("n").unwrap()).collect::<Vec<_>>(),
            [3, 6, 9]
        );
        assert!(all_pass(&v));
        let v = grid_verify(
            &GridSpec::new(Statement::IdentitySuite)
                .range("n", 1, 3)
                .range("m", 1, 3),
        )
        .unwrap();
        assert_eq!(v.len(), 6 * 4);
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let spec = GridSpec::new(Statement::QsumProduct)
            .range("n", 2, 8)
            .range("m", 1, 2);
        let strip = |v: Vec<Verdict>| -> Vec<_> {
            v.into_iter()
                .map(|x| (x.statement, x.params, x.witness))
                .collect()
        };
        let one = strip(grid_verify(&spec).unwrap());
        let three = strip(grid_verify(&spec.clone().workers(3)).unwrap());
        assert_eq!(one, three);
    }
}
