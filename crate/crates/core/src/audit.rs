//! Grid-sweep verification harness: every identity the library implements is
//! checked by exact arithmetic against an independent brute-force oracle
//! (direct recurrences for sequence values, repeated multiplication for
//! matrix powers), and the known misprints in the source closed forms are
//! reproduced as explicit findings with counterexamples.
//!
//! Reports are deterministic: suites iterate grids in a fixed order and the
//! final list is sorted by identity id, so two runs over the same grid are
//! byte-identical.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Poly, Rational};
use crate::genmatrix::{
    hadamard_l, hadamard_q, mat_pow, mat_ql, mat_qq, mat_qq_symbolic, matrix_recurrence_residual,
    qq_pow_closed, qq_pow_closed_symbolic, ql_pow_closed, Mat2, SeqFamily,
};
use crate::sequences::{
    bp_fib, bp_fib_poly, bp_lucas, bridge_residuals, cassini_l, cassini_q, fib_add, fib_sub,
    parity_eps, ParamSet,
};
use crate::spectral::{
    binet_q, binet_q_float, embed_rational_matrix, hadamard_spectrum, qq_eigen, HadamardSpectrum,
};

const COUNTEREXAMPLE_CAP: usize = 3;
const SYMBOLIC_POWER_CAP: i64 = 20;
const DIAGONALIZATION_NEG_RANGE: i64 = 10;
const FLOAT_INDEX_CAP: i64 = 70;
const FLOAT_REL_TOL: f64 = 1e-9;

/// Parameter grid a sweep runs over. Every identity is checked at each
/// `(a, b)` pair (and `x` where applicable) across its index range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamGrid {
    #[serde(rename = "aValues")]
    pub a_values: Vec<Rational>,
    #[serde(rename = "bValues")]
    pub b_values: Vec<Rational>,
    #[serde(rename = "nMax")]
    pub n_max: i64,
    #[serde(rename = "mMax")]
    pub m_max: i64,
    #[serde(rename = "xValues")]
    pub x_values: Vec<Rational>,
}

impl Default for ParamGrid {
    /// The standard grid: `a, b ∈ {1, 2, 3, 1/2, -1}`, indices to 40
    /// (25 for two-index identities), `x ∈ {1, 2}`. A negative and a
    /// non-integer value are present on purpose: integer-only grids mask
    /// sign and denominator errors.
    fn default() -> Self {
        let half = Rational::new(1.into(), 2.into()).expect("nonzero denominator");
        let values = vec![
            Rational::from(1),
            Rational::from(2),
            Rational::from(3),
            half,
            Rational::from(-1),
        ];
        ParamGrid {
            a_values: values.clone(),
            b_values: values,
            n_max: 40,
            m_max: 25,
            x_values: vec![Rational::from(1), Rational::from(2)],
        }
    }
}

impl ParamGrid {
    pub fn validate(&self) -> Result<()> {
        if self.a_values.is_empty() || self.b_values.is_empty() || self.x_values.is_empty() {
            return Err(Error::InvalidParameter("the grid must be non-empty".into()));
        }
        if self.n_max < 1 || self.m_max < 1 {
            return Err(Error::InvalidParameter(
                "grid index bounds must be positive".into(),
            ));
        }
        if self
            .a_values
            .iter()
            .chain(&self.b_values)
            .any(Rational::is_zero)
        {
            return Err(Error::InvalidParameter(
                "grid parameters must be nonzero".into(),
            ));
        }
        Ok(())
    }

    /// All `(a, b)` pairs in deterministic order.
    pub fn pairs(&self) -> Vec<ParamSet> {
        let mut out = Vec::with_capacity(self.a_values.len() * self.b_values.len());
        for a in &self.a_values {
            for b in &self.b_values {
                out.push(ParamSet::new(a.clone(), b.clone()).expect("validated nonzero"));
            }
        }
        out
    }
}

/// Verdict for one audited identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    /// The claim fails as printed but holds after a documented sign or
    /// transpose fix.
    #[serde(rename = "PASS-WITH-CORRECTION")]
    PassWithCorrection,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::PassWithCorrection => "PASS-WITH-CORRECTION",
        };
        f.write_str(s)
    }
}

/// A concrete grid point where a claim disagrees with exact computation:
/// `expected` is the printed prediction, `actual` the exact value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub a: Rational,
    pub b: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Rational>,
    pub expected: String,
    pub actual: String,
}

/// Audit verdict for one identity over the whole grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    #[serde(rename = "identityId")]
    pub identity_id: String,
    pub statement: String,
    pub status: Status,
    #[serde(rename = "checkedPoints")]
    pub checked_points: u64,
    pub counterexamples: Vec<Counterexample>,
    pub notes: String,
}

/// The audit suites, named after what they sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    ClosedForms,
    Determinants,
    Cassini,
    Bridge,
    Addition,
    Binet,
    MatrixRecurrence,
    Hadamard,
    Spectra,
    Errata,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::ClosedForms,
        Suite::Determinants,
        Suite::Cassini,
        Suite::Bridge,
        Suite::Addition,
        Suite::Binet,
        Suite::MatrixRecurrence,
        Suite::Hadamard,
        Suite::Spectra,
        Suite::Errata,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::ClosedForms => "closed-forms",
            Suite::Determinants => "determinants",
            Suite::Cassini => "cassini",
            Suite::Bridge => "bridge",
            Suite::Addition => "addition",
            Suite::Binet => "binet",
            Suite::MatrixRecurrence => "matrix-recurrence",
            Suite::Hadamard => "hadamard",
            Suite::Spectra => "spectra",
            Suite::Errata => "errata",
        }
    }

    /// Parse a comma-separated suite list; `all` selects every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s.trim() == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.split(',')
            .map(|part| part.trim().parse())
            .collect::<Result<Vec<_>>>()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown suite: {s:?}")))
    }
}

/// Identity ids a full audit run must produce; the self-check test fails if
/// any goes missing, so coverage cannot silently regress.
pub const REQUIRED_IDENTITY_IDS: [&str; 30] = [
    "bridge-fib-lucas",
    "bridge-lucas-fib",
    "errata-hadamard-inverse-transpose",
    "errata-lucas-hadamard-odd-sign",
    "errata-poly-recurrence-parity",
    "fib-addition-forward",
    "fib-addition-forward-alt",
    "fib-binet-exact",
    "fib-binet-float",
    "fib-cassini",
    "fib-subtraction",
    "fib-subtraction-alt",
    "hadamard-even-transpose",
    "hadamard-l-definition-sign",
    "hadamard-l-determinant",
    "hadamard-l-spectrum-corrected",
    "hadamard-q-definition",
    "hadamard-q-determinant",
    "hadamard-q-spectrum",
    "lucas-cassini",
    "qq-diagonalization",
    "qq-matrix-recurrence",
    "qq-power-binary-exponentiation",
    "qq-power-closed-form",
    "qq-power-closed-form-symbolic",
    "qq-power-determinant",
    "ql-matrix-recurrence",
    "ql-power-binary-exponentiation",
    "ql-power-closed-form",
    "ql-power-determinant",
];

/// Run the selected suites over a grid. Output is sorted by identity id and
/// fully deterministic.
pub fn run_audit(grid: &ParamGrid, suites: &[Suite]) -> Result<Vec<AuditReport>> {
    grid.validate()?;
    let mut reports = Vec::new();
    for suite in Suite::ALL {
        if !suites.contains(&suite) {
            continue;
        }
        let batch = match suite {
            Suite::ClosedForms => suite_closed_forms(grid),
            Suite::Determinants => suite_determinants(grid),
            Suite::Cassini => suite_cassini(grid),
            Suite::Bridge => suite_bridge(grid),
            Suite::Addition => suite_addition(grid),
            Suite::Binet => suite_binet(grid),
            Suite::MatrixRecurrence => suite_matrix_recurrence(grid),
            Suite::Hadamard => suite_hadamard(grid),
            Suite::Spectra => suite_spectra(grid),
            Suite::Errata => suite_errata(grid),
        };
        reports.extend(batch);
    }
    reports.sort_by(|lhs, rhs| lhs.identity_id.cmp(&rhs.identity_id));
    Ok(reports)
}

pub fn has_failures(reports: &[AuditReport]) -> bool {
    reports.iter().any(|r| r.status == Status::Fail)
}

/// Human-readable rendering, one line per identity plus counterexample
/// details for anything that is not a plain pass.
pub fn render_text(reports: &[AuditReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!(
            "[{}] {} ({} points)\n",
            r.status, r.identity_id, r.checked_points
        ));
        if r.status != Status::Pass {
            out.push_str(&format!("    {}\n", r.statement));
            for c in &r.counterexamples {
                let mut loc = format!("a={}, b={}", c.a, c.b);
                if let Some(n) = c.n {
                    loc.push_str(&format!(", n={n}"));
                }
                if let Some(m) = c.m {
                    loc.push_str(&format!(", m={m}"));
                }
                if let Some(x) = &c.x {
                    loc.push_str(&format!(", x={x}"));
                }
                out.push_str(&format!(
                    "    at {loc}: printed {} vs exact {}\n",
                    c.expected, c.actual
                ));
            }
        }
        if !r.notes.is_empty() {
            out.push_str(&format!("    note: {}\n", r.notes));
        }
    }
    let (pass, corrected, fail) = reports.iter().fold((0, 0, 0), |acc, r| match r.status {
        Status::Pass => (acc.0 + 1, acc.1, acc.2),
        Status::PassWithCorrection => (acc.0, acc.1 + 1, acc.2),
        Status::Fail => (acc.0, acc.1, acc.2 + 1),
    });
    out.push_str(&format!(
        "{} identities: {pass} pass, {corrected} pass-with-correction, {fail} fail\n",
        reports.len()
    ));
    out
}

/// Accumulates one identity's sweep.
struct Check {
    id: &'static str,
    statement: &'static str,
    checked: u64,
    failures: u64,
    counterexamples: Vec<Counterexample>,
    notes: Vec<String>,
}

#[derive(Clone)]
struct Point {
    a: Rational,
    b: Rational,
    n: Option<i64>,
    m: Option<i64>,
    x: Option<Rational>,
}

impl Point {
    fn new(p: &ParamSet) -> Self {
        Point {
            a: p.a().clone(),
            b: p.b().clone(),
            n: None,
            m: None,
            x: None,
        }
    }

    fn n(mut self, n: i64) -> Self {
        self.n = Some(n);
        self
    }

    fn m(mut self, m: i64) -> Self {
        self.m = Some(m);
        self
    }

    fn x(mut self, x: &Rational) -> Self {
        self.x = Some(x.clone());
        self
    }
}

impl Check {
    fn new(id: &'static str, statement: &'static str) -> Self {
        Check {
            id,
            statement,
            checked: 0,
            failures: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    /// Record one grid point; `detail` renders the printed-vs-exact pair and
    /// is only invoked on failure.
    fn point(&mut self, at: Point, ok: bool, detail: impl FnOnce() -> (String, String)) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < COUNTEREXAMPLE_CAP {
                let (expected, actual) = detail();
                self.counterexamples.push(Counterexample {
                    a: at.a,
                    b: at.b,
                    n: at.n,
                    m: at.m,
                    x: at.x,
                    expected,
                    actual,
                });
            }
        }
    }

    /// Record a documented discrepancy point (printed text vs exact value)
    /// for a finding that passes with correction.
    fn discrepancy(&mut self, at: Point, expected: String, actual: String) {
        if self.counterexamples.len() < COUNTEREXAMPLE_CAP {
            self.counterexamples.push(Counterexample {
                a: at.a,
                b: at.b,
                n: at.n,
                m: at.m,
                x: at.x,
                expected,
                actual,
            });
        }
    }

    fn finish(self) -> AuditReport {
        self.finish_as(Status::Pass)
    }

    fn finish_as(mut self, status: Status) -> AuditReport {
        let status = if self.failures > 0 {
            self.notes
                .push(format!("{} of {} points failed", self.failures, self.checked));
            Status::Fail
        } else {
            status
        };
        AuditReport {
            identity_id: self.id.into(),
            statement: self.statement.into(),
            status,
            checked_points: self.checked,
            counterexamples: self.counterexamples,
            notes: self.notes.join("; "),
        }
    }
}

/// Audit-local oracle: `q_k(x)` by direct recurrence on the evaluated
/// coefficients, extended to negative `k` by the sign rule.
fn oracle_fib_at(k: i64, p: &ParamSet, x: &Rational) -> Rational {
    let m = k.unsigned_abs() as i64;
    let mut prev2 = Rational::zero();
    if m == 0 {
        return prev2;
    }
    let ax = p.a() * x;
    let bx = p.b() * x;
    let mut prev = Rational::one();
    for i in 2..=m {
        let coeff = if i % 2 == 0 { &ax } else { &bx };
        let next = &(coeff * &prev) + &prev2;
        prev2 = std::mem::replace(&mut prev, next);
    }
    if k < 0 && m % 2 == 0 {
        -prev
    } else {
        prev
    }
}

fn suite_closed_forms(grid: &ParamGrid) -> Vec<AuditReport> {
    let mut closed = Check::new(
        "qq-power-closed-form",
        "signed powers of the Fibonacci-side generating matrix match the sequence-valued closed form at concrete x",
    );
    let mut binexp = Check::new(
        "qq-power-binary-exponentiation",
        "binary exponentiation of the Fibonacci-side generating matrix matches repeated multiplication",
    );
    let mut symbolic = Check::new(
        "qq-power-closed-form-symbolic",
        "signed powers of the Fibonacci-side generating matrix match the polynomial closed form with symbolic x",
    );
    let mut lucas_closed = Check::new(
        "ql-power-closed-form",
        "powers of the Lucas-side generating matrix match the closed form (Fibonacci entries for even n, Lucas entries for odd n)",
    );
    let mut lucas_binexp = Check::new(
        "ql-power-binary-exponentiation",
        "binary exponentiation of the Lucas-side generating matrix matches repeated multiplication",
    );

    for p in grid.pairs() {
        for x in &grid.x_values {
            let m = mat_qq(&p, x);
            let m_inv = m.inv().expect("det -b/a is nonzero");
            for direction in [1i64, -1] {
                let step = if direction == 1 { &m } else { &m_inv };
                let mut acc = m.identity_like();
                let first = if direction == 1 { 0 } else { 1 };
                for k in first..=grid.n_max {
                    if k > 0 {
                        acc = acc.mul(step);
                    }
                    let n = direction * k;
                    let cf = qq_pow_closed(n, &p, x);
                    closed.point(Point::new(&p).n(n).x(x), cf == acc, || {
                        (cf.to_string(), acc.to_string())
                    });
                    let bp = mat_pow(&m, n).expect("invertible");
                    binexp.point(Point::new(&p).n(n).x(x), bp == acc, || {
                        (bp.to_string(), acc.to_string())
                    });
                }
            }
        }

        let sym = mat_qq_symbolic(&p);
        let sym_inv = sym.inv().expect("det -b/a is a unit");
        let cap = grid.n_max.min(SYMBOLIC_POWER_CAP);
        for direction in [1i64, -1] {
            let step = if direction == 1 { &sym } else { &sym_inv };
            let mut acc = sym.identity_like();
            let first = if direction == 1 { 0 } else { 1 };
            for k in first..=cap {
                if k > 0 {
                    acc = acc.mul(step);
                }
                let n = direction * k;
                let cf = qq_pow_closed_symbolic(n, &p);
                symbolic.point(Point::new(&p).n(n), cf == acc, || {
                    (cf.to_string(), acc.to_string())
                });
            }
        }

        let ml = mat_ql(&p);
        let mut acc = ml.identity_like();
        for n in 0..=grid.n_max {
            if n > 0 {
                acc = acc.mul(&ml);
            }
            let cf = ql_pow_closed(n, &p).expect("n >= 0");
            lucas_closed.point(Point::new(&p).n(n), cf == acc, || {
                (cf.to_string(), acc.to_string())
            });
            let bp = mat_pow(&ml, n).expect("nonnegative power");
            lucas_binexp.point(Point::new(&p).n(n), bp == acc, || {
                (bp.to_string(), acc.to_string())
            });
        }
    }

    vec![
        closed.finish(),
        binexp.finish(),
        symbolic.finish(),
        lucas_closed.finish(),
        lucas_binexp.finish(),
    ]
}

fn suite_determinants(grid: &ParamGrid) -> Vec<AuditReport> {
    let mut qq = Check::new(
        "qq-power-determinant",
        "det of the n-th Fibonacci-side matrix power equals (-b/a)^n for signed n",
    );
    let mut ql = Check::new(
        "ql-power-determinant",
        "det of the n-th Lucas-side matrix power equals ((a^2/b^2)(ab+4))^n",
    );
    for p in grid.pairs() {
        let neg_ratio = -p.ratio_ba();
        let m = mat_qq(&p, &Rational::one());
        for n in -grid.n_max..=grid.n_max {
            let expected = neg_ratio.pow(n);
            let actual = mat_pow(&m, n).expect("invertible").det();
            qq.point(Point::new(&p).n(n), actual == expected, || {
                (expected.to_string(), actual.to_string())
            });
        }

        let base = &(&p.ratio_ab() * &p.ratio_ab()) * &p.ab_plus_4();
        let ml = mat_ql(&p);
        let mut acc = ml.identity_like();
        for n in 1..=grid.n_max {
            acc = acc.mul(&ml);
            let expected = base.pow(n);
            let actual = acc.det();
            ql.point(Point::new(&p).n(n), actual == expected, || {
                (expected.to_string(), actual.to_string())
            });
        }
    }
    vec![qq.finish(), ql.finish()]
}

fn suite_cassini(grid: &ParamGrid) -> Vec<AuditReport> {
    let mut fib = Check::new(
        "fib-cassini",
        "a^{1-eps} b^{eps} q_{n+1} q_{n-1} - a^{eps} b^{1-eps} q_n^2 = a(-1)^n",
    );
    let mut lucas = Check::new(
        "lucas-cassini",
        "(b/a)^{1-eps} l_{n+1} l_{n-1} - (b/a)^{eps} l_n^2 = (ab+4)(-1)^{n+1}",
    );
    let mut skipped = 0u64;
    for p in grid.pairs() {
        for n in 1..=grid.n_max {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let expected = p.a() * &Rational::from(sign);
            let actual = cassini_q(n, &p);
            fib.point(Point::new(&p).n(n), actual == expected, || {
                (expected.to_string(), actual.to_string())
            });
        }
        if p.is_degenerate() {
            skipped += 1;
            continue;
        }
        for n in 1..=grid.n_max {
            let sign = if n % 2 == 0 { -1 } else { 1 };
            let expected = &p.ab_plus_4() * &Rational::from(sign);
            let actual = cassini_l(n, &p).expect("nondegenerate");
            lucas.point(Point::new(&p).n(n), actual == expected, || {
                (expected.to_string(), actual.to_string())
            });
        }
    }
    if skipped > 0 {
        lucas.note(format!("skipped {skipped} pairs with ab = -4"));
    }
    vec![fib.finish(), lucas.finish()]
}

fn suite_bridge(grid: &ParamGrid) -> Vec<AuditReport> {
    let mut fl = Check::new(
        "bridge-fib-lucas",
        "(ab+4) q_n = l_{n+1} + l_{n-1} for signed n",
    );
    let mut lf = Check::new("bridge-lucas-fib", "l_n = q_{n+1} + q_{n-1} for signed n");
    for p in grid.pairs() {
        for n in -grid.n_max..=grid.n_max {
            let (r1, r2) = bridge_residuals(n, &p);
            fl.point(Point::new(&p).n(n), r1.is_zero(), || {
                ("0".into(), r1.to_string())
            });
            lf.point(Point::new(&p).n(n), r2.is_zero(), || {
                ("0".into(), r2.to_string())
            });
        }
    }
    vec![fl.finish(), lf.finish()]
}

fn suite_addition(grid: &ParamGrid) -> Vec<AuditReport> {
    let mut add = Check::new(
        "fib-addition-forward",
        "q_{m+n} = q_{m+1} q_n + q_m q_{n-1} (even m+n) and with (b/a)^{eps(m)}, (b/a)^{eps(n)} scales (odd m+n)",
    );
    add.note(
        "the even/odd split is decided by the parity of m+n; the lower-right scale of the \
         power-sum matrix reads eps(m+n)",
    );
    let mut add_alt = Check::new(
        "fib-addition-forward-alt",
        "q_{m+n} = q_m q_{n+1} + q_{m-1} q_n (even m+n) and with (b/a)^{eps(n)}, (b/a)^{eps(m)} scales (odd m+n)",
    );
    let mut sub = Check::new(
        "fib-subtraction",
        "q_{m-n} = (-1)^{n+1}(q_{m+1} q_n - q_m q_{n+1}) (even m+n) and with (-b/a)^{eps} scales (odd m+n)",
    );
    let mut sub_alt = Check::new(
        "fib-subtraction-alt",
        "q_{m-n} = (-1)^{n+1}(q_{m-1} q_n - q_m q_{n-1}) (even m+n) and with (-b/a)^{eps} scales (odd m+n)",
    );

    for p in grid.pairs() {
        let ratio = p.ratio_ba();
        let neg_ratio = -&ratio;
        for m in 1..=grid.m_max {
            for n in 1..=m {
                let expected_sum = bp_fib(m + n, &p);
                let got = fib_add(m, n, &p).expect("m, n >= 1");
                add.point(Point::new(&p).m(m).n(n), got == expected_sum, || {
                    (expected_sum.to_string(), got.to_string())
                });

                let t1 = &bp_fib(m, &p) * &bp_fib(n + 1, &p);
                let t2 = &bp_fib(m - 1, &p) * &bp_fib(n, &p);
                let got_alt = if (m + n) % 2 == 0 {
                    &t1 + &t2
                } else {
                    &(&ratio.pow(parity_eps(n)) * &t1) + &(&ratio.pow(parity_eps(m)) * &t2)
                };
                add_alt.point(Point::new(&p).m(m).n(n), got_alt == expected_sum, || {
                    (expected_sum.to_string(), got_alt.to_string())
                });

                let expected_diff = bp_fib(m - n, &p);
                let got = fib_sub(m, n, &p).expect("m >= n >= 0");
                sub.point(Point::new(&p).m(m).n(n), got == expected_diff, || {
                    (expected_diff.to_string(), got.to_string())
                });

                let s1 = &bp_fib(m - 1, &p) * &bp_fib(n, &p);
                let s2 = &bp_fib(m, &p) * &bp_fib(n - 1, &p);
                let got_alt = if (m + n) % 2 == 0 {
                    let diff = &s1 - &s2;
                    if n % 2 == 0 {
                        -diff
                    } else {
                        diff
                    }
                } else {
                    &(&neg_ratio.pow(parity_eps(n)) * &s2)
                        + &(&neg_ratio.pow(parity_eps(m)) * &s1)
                };
                sub_alt.point(Point::new(&p).m(m).n(n), got_alt == expected_diff, || {
                    (expected_diff.to_string(), got_alt.to_string())
                });
            }
        }
    }
    vec![add.finish(), add_alt.finish(), sub.finish(), sub_alt.finish()]
}

fn suite_binet(grid: &ParamGrid) -> Vec<AuditReport> {
    let mut exact = Check::new(
        "fib-binet-exact",
        "the quadratic-extension Binet form reproduces the recurrence for signed n; the radical part always cancels",
    );
    let mut float = Check::new(
        "fib-binet-float",
        "double-precision Binet stays within 1e-9 relative error of the exact value",
    );
    let mut diag = Check::new(
        "qq-diagonalization",
        "U V^n U^{-1} over Q(sqrt(d)) reconstructs the n-th matrix power exactly",
    );
    let mut skipped = 0u64;

    for p in grid.pairs() {
        for x in &grid.x_values {
            let s = &p.ab() * &(x * x);
            if s == Rational::from(-4) {
                skipped += 1;
                continue;
            }
            for n in -grid.n_max..=grid.n_max {
                let expected = oracle_fib_at(n, &p, x);
                match binet_q(n, &p, x) {
                    Ok(actual) => {
                        exact.point(Point::new(&p).n(n).x(x), actual == expected, || {
                            (expected.to_string(), actual.to_string())
                        });
                    }
                    Err(e) => exact.point(Point::new(&p).n(n).x(x), false, || {
                        (expected.to_string(), format!("error: {e}"))
                    }),
                }
            }

            let eigen = qq_eigen(&p, x).expect("nondegenerate");
            let m = mat_qq(&p, x);
            let lo = -DIAGONALIZATION_NEG_RANGE.min(grid.n_max);
            let hi = grid.n_max.min(SYMBOLIC_POWER_CAP);
            for n in lo..=hi {
                let direct =
                    embed_rational_matrix(&mat_pow(&m, n).expect("invertible"), eigen.radicand());
                let rebuilt = eigen.reconstruct_power(n).expect("U is invertible");
                diag.point(Point::new(&p).n(n).x(x), rebuilt == direct, || {
                    (direct.to_string(), rebuilt.to_string())
                });
            }
        }

        let one = Rational::one();
        if !p.is_degenerate() {
            for n in 1..=grid.n_max.min(FLOAT_INDEX_CAP) {
                let exact_value = bp_fib(n, &p);
                let approx = binet_q_float(n, &p, &one).expect("nondegenerate");
                let reference = exact_value.to_f64();
                let err = (approx - reference).abs() / reference.abs().max(1.0);
                float.point(Point::new(&p).n(n), err <= FLOAT_REL_TOL, || {
                    (format!("{reference} (within 1e-9 relative)"), approx.to_string())
                });
            }
        }
    }
    if skipped > 0 {
        let note =
            format!("skipped {skipped} (a, b, x) points with a*b*x^2 = -4 (repeated roots)");
        exact.note(note.clone());
        diag.note(note);
    }
    vec![exact.finish(), float.finish(), diag.finish()]
}

fn suite_matrix_recurrence(grid: &ParamGrid) -> Vec<AuditReport> {
    let mut qq = Check::new(
        "qq-matrix-recurrence",
        "Q_q^n = b Q_q^{n-1} + (b/a) Q_q^{n-2} at x = 1",
    );
    let mut ql = Check::new(
        "ql-matrix-recurrence",
        "Q_l^n = (b/(a(ab+4))) Q_l^{n+1} + (a/b) Q_l^{n-1}",
    );
    let mut skipped = 0u64;
    for p in grid.pairs() {
        for n in 2..=grid.n_max {
            let res = matrix_recurrence_residual(SeqFamily::Fibonacci, n, &p).expect("valid");
            qq.point(Point::new(&p).n(n), res.is_zero(), || {
                ("0 matrix".into(), res.to_string())
            });
        }
        if p.is_degenerate() {
            skipped += 1;
            continue;
        }
        for n in 1..=grid.n_max {
            let res = matrix_recurrence_residual(SeqFamily::Lucas, n, &p).expect("nondegenerate");
            ql.point(Point::new(&p).n(n), res.is_zero(), || {
                ("0 matrix".into(), res.to_string())
            });
        }
    }
    if skipped > 0 {
        ql.note(format!("skipped {skipped} pairs with ab = -4"));
    }
    vec![qq.finish(), ql.finish()]
}

fn suite_hadamard(grid: &ParamGrid) -> Vec<AuditReport> {
    let mut q_def = Check::new(
        "hadamard-q-definition",
        "±(a/b)^n (Q_q^n ∘ adj Q_q^n) equals the literal entrywise product Q_q^n ∘ Q_q^{-n}",
    );
    let mut l_def = Check::new(
        "hadamard-l-definition-sign",
        "(b^2/(a^2(ab+4)))^n (Q_l^n ∘ adj Q_l^n) equals the literal entrywise product Q_l^n ∘ Q_l^{-n}; the printed odd-n minus sign negates it",
    );
    l_def.note(
        "as defined (with the odd-n minus sign) the Lucas-side Hadamard product is the \
         negative of the literal entrywise product for odd n; the spectra and errata \
         suites record the knock-on sign corrections",
    );
    let mut q_det = Check::new(
        "hadamard-q-determinant",
        "det(Q_q^n ∘ Q_q^{-n}) = 1 + 2(b/a)q_n^2 (even n) and 1 - 2q_n^2 (odd n)",
    );
    let mut l_det = Check::new(
        "hadamard-l-determinant",
        "det(Q_l^n ∘ Q_l^{-n}) = 1 + 2(b/a)q_n^2 (even n) and 1 + 2(b/(a(ab+4)))l_n^2 (odd n)",
    );
    let one = Rational::one();
    let two = Rational::from(2);
    let mut skipped = 0u64;

    for p in grid.pairs() {
        let m = mat_qq(&p, &one);
        let m_inv = m.inv().expect("det -b/a is nonzero");
        let mut pos = m.identity_like();
        let mut neg = m.identity_like();
        for n in 1..=grid.n_max {
            pos = pos.mul(&m);
            neg = neg.mul(&m_inv);
            let literal = pos.hadamard(&neg);
            let h = hadamard_q(n, &p).expect("n >= 1");
            q_def.point(Point::new(&p).n(n), h == literal, || {
                (literal.to_string(), h.to_string())
            });

            let qn = bp_fib(n, &p);
            let q_sq = &qn * &qn;
            let expected = if n % 2 == 0 {
                &one + &(&two * &(&p.ratio_ba() * &q_sq))
            } else {
                &one - &(&two * &q_sq)
            };
            let actual = h.det();
            q_det.point(Point::new(&p).n(n), actual == expected, || {
                (expected.to_string(), actual.to_string())
            });
        }

        if p.is_degenerate() {
            skipped += 1;
            continue;
        }
        let ml = mat_ql(&p);
        let ml_inv = ml.inv().expect("nondegenerate");
        let mut pos = ml.identity_like();
        let mut neg = ml.identity_like();
        for n in 1..=grid.n_max {
            pos = pos.mul(&ml);
            neg = neg.mul(&ml_inv);
            let literal = pos.hadamard(&neg);
            let h = hadamard_l(n, &p).expect("nondegenerate");
            let ok = if n % 2 == 0 {
                h == literal
            } else {
                h == literal.neg()
            };
            l_def.point(Point::new(&p).n(n), ok, || {
                (literal.to_string(), h.to_string())
            });

            let expected = if n % 2 == 0 {
                let qn = bp_fib(n, &p);
                &one + &(&two * &(&p.ratio_ba() * &(&qn * &qn)))
            } else {
                let ln = bp_lucas(n, &p);
                let coeff = p.b() / &(p.a() * &p.ab_plus_4());
                &one + &(&two * &(&coeff * &(&ln * &ln)))
            };
            let actual = h.det();
            l_det.point(Point::new(&p).n(n), actual == expected, || {
                (expected.to_string(), actual.to_string())
            });
        }
    }
    if skipped > 0 {
        let note = format!("skipped {skipped} pairs with ab = -4");
        l_def.note(note.clone());
        l_det.note(note);
    }
    vec![q_def.finish(), l_def.finish(), q_det.finish(), l_det.finish()]
}

fn suite_spectra(grid: &ParamGrid) -> Vec<AuditReport> {
    let mut q_spec = Check::new(
        "hadamard-q-spectrum",
        "trace, eigenvalues {1, det}, eigenvectors [±b/a, 1], and the inverse of Q_q^n ∘ Q_q^{-n} match the closed forms exactly",
    );
    q_spec.note(
        "the printed odd-n inverse writes its lower-right entry as 1 - q^2/det, but the \
         matrix has constant diagonal, so the exact inverse forces 1 + q^2/det there \
         (equal to the upper-left entry)",
    );
    let mut l_spec = Check::new(
        "hadamard-l-spectrum-corrected",
        "trace, eigenvalues, eigenvectors [1, ±b/a], and the inverse of Q_l^n ∘ Q_l^{-n} match the closed forms after negating the printed odd-n trace, eigenvalues, and inverse",
    );
    let mut transpose = Check::new(
        "hadamard-even-transpose",
        "for even n the two Hadamard products are exact transposes of each other, equal only when a^2 = b^2 or q_n = 0",
    );
    let mut skipped = 0u64;

    for p in grid.pairs() {
        for n in 1..=grid.n_max {
            let h = hadamard_q(n, &p).expect("n >= 1");
            match hadamard_spectrum(SeqFamily::Fibonacci, n, &p) {
                Ok(s) => {
                    let ok = spectrum_is_consistent(&h, &s);
                    q_spec.point(Point::new(&p).n(n), ok, || {
                        ("consistent spectrum".into(), format!("{s:?}"))
                    });
                }
                Err(e) => q_spec.point(Point::new(&p).n(n), false, || {
                    ("consistent spectrum".into(), format!("error: {e}"))
                }),
            }
        }

        if p.is_degenerate() {
            skipped += 1;
            continue;
        }
        for n in 1..=grid.n_max {
            let h = hadamard_l(n, &p).expect("nondegenerate");
            match hadamard_spectrum(SeqFamily::Lucas, n, &p) {
                Ok(s) => {
                    let unit = if n % 2 == 0 {
                        Rational::one()
                    } else {
                        Rational::from(-1)
                    };
                    let ok = spectrum_is_consistent(&h, &s) && s.eigenvalues.0 == unit;
                    l_spec.point(Point::new(&p).n(n), ok, || {
                        ("consistent corrected spectrum".into(), format!("{s:?}"))
                    });
                }
                Err(e) => l_spec.point(Point::new(&p).n(n), false, || {
                    ("consistent corrected spectrum".into(), format!("error: {e}"))
                }),
            }

            if n % 2 == 0 {
                let hq = hadamard_q(n, &p).expect("n >= 1");
                let equality_expected = symmetric_boundary(&p, n);
                let ok = h == hq.transpose() && (h == hq) == equality_expected;
                transpose.point(Point::new(&p).n(n), ok, || {
                    (format!("transpose of {hq}"), h.to_string())
                });
            }
        }
    }
    if skipped > 0 {
        let note = format!("skipped {skipped} pairs with ab = -4");
        l_spec.note(note.clone());
        transpose.note(note);
    }
    vec![q_spec.finish(), l_spec.finish(), transpose.finish()]
}

/// Re-verify a spectrum against its matrix: eigen equations, trace/det
/// consistency, and the inverse round-trip.
fn spectrum_is_consistent(h: &Mat2<Rational>, s: &HadamardSpectrum) -> bool {
    let trace_ok = &s.eigenvalues.0 + &s.eigenvalues.1 == s.trace && s.trace == h.trace();
    let det_ok =
        &s.eigenvalues.0 * &s.eigenvalues.1 == s.determinant && s.determinant == h.det();
    let eigen_ok = s.eigenpairs().iter().all(|(lambda, v)| {
        let r1 = &(&h.e11 * &v.0) + &(&h.e12 * &v.1);
        let r2 = &(&h.e21 * &v.0) + &(&h.e22 * &v.1);
        r1 == *lambda * &v.0 && r2 == *lambda * &v.1
    });
    let inverse_ok = match &s.inverse {
        Some(inv) => h.mul(inv) == h.identity_like(),
        None => s.determinant.is_zero(),
    };
    trace_ok && det_ok && eigen_ok && inverse_ok
}

/// Exact boundary where the two even-index Hadamard products coincide: the
/// Fibonacci-side matrix is symmetric exactly when (b/a)^2 q_n^2 = q_n^2,
/// i.e. when a^2 = b^2 or q_n = 0.
fn symmetric_boundary(p: &ParamSet, n: i64) -> bool {
    let a_sq = p.a() * p.a();
    let b_sq = p.b() * p.b();
    a_sq == b_sq || bp_fib(n, p).is_zero()
}

/// Polynomial family with the printed parity assignment (odd steps scale by
/// a·x, even steps by b·x) — the reading the closed forms contradict.
fn printed_parity_poly(n: i64, p: &ParamSet) -> Poly {
    let mut prev2 = Poly::zero();
    let mut prev = Poly::one();
    if n == 0 {
        return prev2;
    }
    for i in 2..=n {
        let coeff = if i % 2 == 1 { p.a() } else { p.b() };
        let step = Poly::from_coeffs(vec![Rational::zero(), coeff.clone()]);
        let next = &(&step * &prev) + &prev2;
        prev2 = std::mem::replace(&mut prev, next);
    }
    prev
}

fn suite_errata(grid: &ParamGrid) -> Vec<AuditReport> {
    vec![
        errata_poly_parity(grid),
        errata_lucas_hadamard_odd_sign(grid),
        errata_inverse_transpose(grid),
    ]
}

/// The polynomial recurrence as printed assigns a·x to odd indices and b·x
/// to even ones, which contradicts the generating-matrix closed form (and
/// the number sequence at x = 1); swapping the two cases repairs everything.
fn errata_poly_parity(grid: &ParamGrid) -> AuditReport {
    let mut check = Check::new(
        "errata-poly-recurrence-parity",
        "the printed polynomial recurrence parity (odd steps a·x, even steps b·x) contradicts the matrix closed form; swapping the parity cases (even a·x, odd b·x) makes every power identity hold",
    );
    check.note(
        "the closed-form power theorem also prints its parity indicator as n - floor(n/2); \
         only the parity n - 2*floor(n/2) makes the form check out",
    );

    // Canonical counterexample: a=2, b=3. The matrix square has lower-left
    // entry b·x = 3x and the closed form divides out (b/a), forcing
    // q_2(x) = a·x = 2x; the printed parity yields b·x = 3x instead.
    let canonical = ParamSet::from_i64(2, 3).expect("nonzero");
    let forced_q2 = bp_fib_poly(2, &canonical);
    let printed_q2 = printed_parity_poly(2, &canonical);
    check.discrepancy(
        Point::new(&canonical).n(2),
        format!("q_2(x) = {printed_q2} (printed parity)"),
        format!("q_2(x) = {forced_q2} (forced by the matrix square)"),
    );

    let cap = grid.n_max.min(12);
    for p in grid.pairs() {
        let m = mat_qq_symbolic(&p);
        let ratio = p.ratio_ba();
        let mut acc = m.identity_like();
        // When a = b the two parities coincide, so only a ≠ b pairs can
        // witness the misprint; every pair must satisfy the adopted form.
        let mut printed_breaks = p.a() == p.b();
        let mut adopted_holds = true;
        for n in 1..=cap {
            acc = acc.mul(&m);
            if qq_pow_closed_symbolic(n, &p) != acc {
                adopted_holds = false;
            }
            let eps = parity_eps(n);
            let scale = Poly::constant(ratio.pow(n.div_euclid(2)));
            let corner = &scale * &Poly::constant(ratio.pow(eps));
            let printed_cf = Mat2::new(
                &corner * &printed_parity_poly(n + 1, &p),
                &(&scale * &Poly::constant(ratio.clone())) * &printed_parity_poly(n, &p),
                &scale * &printed_parity_poly(n, &p),
                &corner * &printed_parity_poly(n - 1, &p),
            );
            if printed_cf != acc {
                printed_breaks = true;
            }
        }
        check.point(Point::new(&p), adopted_holds && printed_breaks, || {
            (
                "printed parity fails, corrected parity holds".into(),
                format!(
                    "adopted holds: {adopted_holds}, printed breaks (or a = b): {printed_breaks}"
                ),
            )
        });
    }
    check.finish_as(Status::PassWithCorrection)
}

/// For odd n the Lucas-side Hadamard product (as defined, with the printed
/// minus sign) has trace, eigenvalues, and inverse equal to the negatives of
/// the printed corollary values; the determinant is unaffected.
fn errata_lucas_hadamard_odd_sign(grid: &ParamGrid) -> AuditReport {
    let mut check = Check::new(
        "errata-lucas-hadamard-odd-sign",
        "for odd n the printed trace 2(1 + (b/(a(ab+4)))l_n^2), eigenvalues {1, det}, and inverse of the Lucas-side Hadamard product all flip sign under exact evaluation",
    );
    check.note(
        "equivalently: the defining odd-n minus sign makes the matrix the negative of the \
         literal product Q_l^n ∘ Q_l^{-n}, whose trace, eigenvalues, and inverse do match \
         the printed forms; one of the two signs is a misprint",
    );

    let one = Rational::one();
    let two = Rational::from(2);

    // Canonical counterexample: a = b = 1, n = 1.
    let canonical = ParamSet::from_i64(1, 1).expect("nonzero");
    let s = hadamard_spectrum(SeqFamily::Lucas, 1, &canonical).expect("nondegenerate");
    check.discrepancy(
        Point::new(&canonical).n(1),
        "trace 12/5, eigenvalues {1, 7/5}".into(),
        format!(
            "trace {}, eigenvalues {{{}, {}}}",
            s.trace, s.eigenvalues.0, s.eigenvalues.1
        ),
    );

    for p in grid.pairs() {
        if p.is_degenerate() {
            continue;
        }
        let mut n = 1;
        while n <= grid.n_max {
            let ln = bp_lucas(n, &p);
            let l_sq = &ln * &ln;
            let coeff = p.b() / &(p.a() * &p.ab_plus_4());
            let printed_trace = &two * &(&one + &(&coeff * &l_sq));
            let printed_second = &one + &(&two * &(&coeff * &l_sq));
            match hadamard_spectrum(SeqFamily::Lucas, n, &p) {
                Ok(s) => {
                    let trace_flipped = s.trace == -&printed_trace;
                    let eigs_flipped = s.eigenvalues.0 == Rational::from(-1)
                        && s.eigenvalues.1 == -&printed_second;
                    let inverse_flipped = match &s.inverse {
                        Some(inv) => {
                            let delta = &s.determinant;
                            let ab4 = p.ab_plus_4();
                            let ratio = p.ratio_ba();
                            let d11 = &one - &(&(&coeff * &l_sq) / delta);
                            let printed_inv = Mat2::new(
                                d11.clone(),
                                &(&l_sq / &ab4) / delta,
                                &(&(&(&ratio * &ratio) / &ab4) * &l_sq) / delta,
                                d11,
                            );
                            *inv == printed_inv.neg()
                        }
                        None => s.determinant.is_zero(),
                    };
                    check.point(
                        Point::new(&p).n(n),
                        trace_flipped && eigs_flipped && inverse_flipped,
                        || {
                            (
                                format!("trace {printed_trace} (printed)"),
                                format!("trace {}", s.trace),
                            )
                        },
                    );
                }
                Err(e) => check.point(Point::new(&p).n(n), false, || {
                    ("corrected spectrum".into(), format!("error: {e}"))
                }),
            }
            n += 2;
        }
    }
    check.finish_as(Status::PassWithCorrection)
}

/// The printed claim that both even-n Hadamard inverses are one and the same
/// matrix fails whenever a ≠ b; exact computation gives transposes.
fn errata_inverse_transpose(grid: &ParamGrid) -> AuditReport {
    let mut check = Check::new(
        "errata-hadamard-inverse-transpose",
        "for even n the inverses of the two Hadamard products are printed as equal; exactly they are transposes, equal only when a^2 = b^2 or q_n = 0",
    );

    // Canonical counterexample: a=2, b=3, n=2.
    let canonical = ParamSet::from_i64(2, 3).expect("nonzero");
    let hq_inv = hadamard_q(2, &canonical)
        .expect("n >= 1")
        .inv()
        .expect("det 13");
    let hl_inv = hadamard_l(2, &canonical)
        .expect("nondegenerate")
        .inv()
        .expect("det 13");
    check.discrepancy(
        Point::new(&canonical).n(2),
        format!("both inverses equal {hq_inv}"),
        format!("Fibonacci-side inverse {hq_inv} vs Lucas-side inverse {hl_inv}"),
    );

    for p in grid.pairs() {
        if p.is_degenerate() {
            continue;
        }
        let mut n = 2;
        while n <= grid.n_max {
            let hq = hadamard_q(n, &p).expect("n >= 1");
            let hl = hadamard_l(n, &p).expect("nondegenerate");
            if hq.det().is_zero() {
                n += 2;
                continue;
            }
            let hq_inv = hq.inv().expect("nonzero det");
            let hl_inv = hl.inv().expect("transpose shares the det");
            let equality_expected = symmetric_boundary(&p, n);
            let ok = hl_inv == hq_inv.transpose() && (hl_inv == hq_inv) == equality_expected;
            check.point(Point::new(&p).n(n), ok, || {
                (format!("{hq_inv} (printed: equal)"), hl_inv.to_string())
            });
            n += 2;
        }
    }
    check.finish_as(Status::PassWithCorrection)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_grid() -> ParamGrid {
        ParamGrid {
            n_max: 8,
            m_max: 6,
            ..ParamGrid::default()
        }
    }

    #[test]
    fn full_run_covers_required_ids_and_passes() {
        let grid = small_grid();
        let reports = run_audit(&grid, &Suite::ALL).unwrap();
        let ids: Vec<&str> = reports.iter().map(|r| r.identity_id.as_str()).collect();
        for required in REQUIRED_IDENTITY_IDS {
            assert!(ids.contains(&required), "missing identity id {required}");
        }
        assert!(!has_failures(&reports));
        for r in &reports {
            if r.identity_id.starts_with("errata-") {
                assert_eq!(r.status, Status::PassWithCorrection, "{}", r.identity_id);
                assert!(!r.counterexamples.is_empty(), "{}", r.identity_id);
            } else {
                assert_eq!(r.status, Status::Pass, "{}", r.identity_id);
                assert!(r.counterexamples.is_empty(), "{}", r.identity_id);
            }
        }
    }

    #[test]
    fn exactly_three_errata_findings() {
        let reports = run_audit(&small_grid(), &[Suite::Errata]).unwrap();
        assert_eq!(reports.len(), 3);
        assert!(reports
            .iter()
            .all(|r| r.status == Status::PassWithCorrection));
    }

    #[test]
    fn reports_are_sorted_and_deterministic() {
        let grid = small_grid();
        let a = run_audit(&grid, &Suite::ALL).unwrap();
        let b = run_audit(&grid, &Suite::ALL).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        let mut ids: Vec<String> = a.iter().map(|r| r.identity_id.clone()).collect();
        let sorted = {
            let mut s = ids.clone();
            s.sort();
            s
        };
        assert_eq!(ids, sorted);
        ids.dedup();
        assert_eq!(ids.len(), a.len(), "identity ids must be unique");
    }

    #[test]
    fn empty_grid_rejected() {
        let grid = ParamGrid {
            a_values: vec![],
            ..ParamGrid::default()
        };
        assert!(run_audit(&grid, &Suite::ALL).is_err());
        let grid = ParamGrid {
            a_values: vec![Rational::zero()],
            ..ParamGrid::default()
        };
        assert!(run_audit(&grid, &Suite::ALL).is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("bogus".parse::<Suite>().is_err());
        assert_eq!(Suite::parse_list("all").unwrap().len(), Suite::ALL.len());
        assert_eq!(
            Suite::parse_list("cassini, bridge").unwrap(),
            vec![Suite::Cassini, Suite::Bridge]
        );
    }

    #[test]
    fn grid_json_round_trip() {
        let grid = ParamGrid::default();
        let json = serde_json::to_string(&grid).unwrap();
        assert!(json.contains("\"aValues\""));
        assert!(json.contains("\"nMax\""));
        let back: ParamGrid = serde_json::from_str(&json).unwrap();
        assert_eq!(back, grid);
    }

    #[test]
    fn render_text_mentions_every_identity() {
        let reports = run_audit(&small_grid(), &[Suite::Cassini, Suite::Errata]).unwrap();
        let text = render_text(&reports);
        for r in &reports {
            assert!(text.contains(&r.identity_id));
        }
        assert!(text.contains("pass-with-correction"));
    }
}
