//! Mechanical checks of the conjugation action of `s = (θ, x1)` on the
//! Schreier generators of `Ker λ` for the two λ-cyclic braces on `F_n`.

use serde::Serialize;

use super::{FreeAutomorphism, FreeWord, HolElement, Modulus, SchreierGen, SchreierRewriter};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaCheck {
    pub id: String,
    pub lhs: FreeWord,
    pub rhs: FreeWord,
    /// `lhs` rewritten over the named generators.
    pub lhs_generators: String,
    pub holds: bool,
    /// Whether the formula exactly as printed holds; differs from `holds`
    /// only where a reading or correction is recorded in `note`.
    pub printed_holds: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cyclic1Report {
    pub n: usize,
    pub schreier_generator_count: usize,
    pub expected_generator_count: usize,
    pub index: usize,
    pub nielsen_schreier_rank: usize,
    pub rank_consistent: bool,
    pub s_power_word: FreeWord,
    pub s_power_is_translation: bool,
    pub formulas: Vec<FormulaCheck>,
    pub mismatches: Vec<String>,
    pub printed_mismatches: Vec<String>,
}

impl Cyclic1Report {
    pub fn ok(&self) -> bool {
        self.rank_consistent && self.s_power_is_translation && self.mismatches.is_empty()
    }
}

fn format_gens(gens: &[(SchreierGen, i64)]) -> String {
    if gens.is_empty() {
        return "e".into();
    }
    gens.iter()
        .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
        .collect::<Vec<_>>()
        .join(" ")
}

struct Names<'a> {
    r: &'a SchreierRewriter,
}

impl Names<'_> {
    /// `z_{j,k}` with `z_{1,k} = 1`.
    fn z(&self, j: usize, k: i64) -> FreeWord {
        self.r.expand_gen(SchreierGen::Z { j, k })
    }

    fn y(&self, i: usize) -> FreeWord {
        self.r.expand_gen(SchreierGen::Y { i })
    }

    /// `z_{j,0} z_{j,1} ⋯ z_{j,top}`; empty when `top < 0`.
    fn run(&self, j: usize, top: i64) -> FreeWord {
        (0..=top).fold(FreeWord::identity(self.r.rank), |acc, k| acc.mul_unchecked(&self.z(j, k)))
    }

    fn prod(&self, parts: &[FreeWord]) -> FreeWord {
        FreeWord::product(self.r.rank, parts)
    }
}

pub fn verify_cyclic1(n: usize) -> Result<Cyclic1Report> {
    if !(2..=6).contains(&n) {
        return Err(Error::PreconditionFails(format!("n = {n} outside 2..=6")));
    }
    let theta = FreeAutomorphism::generator_cycle(n);
    let rewriter = SchreierRewriter::new(n, Modulus::Finite(n as u64));
    let names = Names { r: &rewriter };
    let s = HolElement::new(1, FreeWord::generator(n, 1, 1));
    let conj = |w: &FreeWord| -> FreeWord {
        let c = HolElement::translation(w.clone()).conjugate_by(&s, &theta);
        assert_eq!(c.power, 0);
        c.word
    };
    let nn = n as i64;
    let mut formulas = Vec::new();
    let mut check = |id: String, lhs: FreeWord, rhs: FreeWord, printed: Option<FreeWord>, note: Option<String>| -> Result<()> {
        let lhs_generators = format_gens(&rewriter.rewrite(&lhs)?);
        let holds = lhs == rhs;
        let printed_holds = printed.map_or(holds, |p| p == lhs);
        formulas.push(FormulaCheck { id, lhs, rhs, lhs_generators, holds, printed_holds, note });
        Ok(())
    };

    check(
        "s^-1 y1 s".into(),
        conj(&names.y(1)),
        names.prod(&[names.run(n, nn - 2), names.y(n)]),
        None,
        None,
    )?;
    check(
        "s^-1 y2 s".into(),
        conj(&names.y(2)),
        names.prod(&[names.run(n, nn - 3), names.y(n)]),
        None,
        None,
    )?;
    for i in 3..=n {
        let corrected = names.prod(&[names.run(n, nn - 3), names.z(i - 1, nn - 2), names.y(n)]);
        let printed = names.prod(&[names.run(n, nn - 3), names.z(i - 2, nn - 2), names.y(n)]);
        let note = (printed != corrected).then(|| {
            format!("printed factor z_{{{},{}}} replaced by z_{{{},{}}}", i - 2, nn - 2, i - 1, nn - 2)
        });
        check(format!("s^-1 y{i} s"), conj(&names.y(i)), corrected, Some(printed), note)?;
    }
    for j in 2..=n {
        check(format!("s^-1 z{{{j},0}} s"), conj(&names.z(j, 0)), names.y(n).inv().mul_unchecked(&names.y(j - 1)), None, None)?;
    }
    if n >= 3 {
        for j in 2..=n {
            let rhs = names.z(j - 1, 0).mul_unchecked(&names.z(n, 0).inv());
            check(format!("s^-1 z{{{j},1}} s"), conj(&names.z(j, 1)), rhs, None, None)?;
        }
    }
    for k in 2..=nn - 2 {
        for j in 2..=n {
            let p = names.run(n, k - 2);
            let rhs = names.prod(&[p.clone(), names.z(j - 1, k - 1), names.z(n, k - 1).inv(), p.inv()]);
            check(format!("s^-1 z{{{j},{k}}} s"), conj(&names.z(j, k)), rhs, None, None)?;
        }
    }
    let x1 = |k: i64| FreeWord::generator(n, 1, k);
    let zn0 = names.z(n, 0);
    check(
        "x1^-1 z{n,0} x1".into(),
        names.prod(&[x1(-1), zn0.clone(), x1(1)]),
        names.y(1).inv().mul_unchecked(&names.y(n)),
        None,
        None,
    )?;
    for k in 2..nn {
        let y1 = names.y(1);
        check(
            format!("x1^-{k} z{{n,0}} x1^{k}"),
            names.prod(&[x1(-k), zn0.clone(), x1(k)]),
            names.prod(&[y1.inv(), names.z(n, nn - k), y1]),
            None,
            None,
        )?;
    }

    let sn = s.pow(nn, &theta);
    let identity_auto = (1..=n).all(|g| {
        let x = FreeWord::generator(n, g, 1);
        theta.apply_power(sn.power, &x).map(|y| y == x).unwrap_or(false)
    });
    let letters = FreeWord::from_syllables(n, (1..=n).map(|g| (g, 1)));
    let s_power_is_translation = identity_auto && sn.word == letters;
    let head = (2..n).fold(FreeWord::identity(n), |acc, j| acc.mul_unchecked(&names.z(j, j as i64 - 1)));
    let literal_last = names.prod(&[x1(nn - 1), FreeWord::generator(n, n, 1), x1(-nn)]);
    check(
        "s^n".into(),
        sn.word.clone(),
        head.mul_unchecked(&names.y(n)),
        Some(head.mul_unchecked(&literal_last)),
        Some(format!("z_{{{n},{}}} read as y_{n}", n - 1)),
    )?;

    let schreier_generator_count = rewriter.generators().len();
    let nielsen_schreier_rank = n * (n - 1) + 1;
    let mismatches = formulas.iter().filter(|f| !f.holds).map(|f| f.id.clone()).collect();
    let printed_mismatches = formulas.iter().filter(|f| !f.printed_holds).map(|f| f.id.clone()).collect();
    Ok(Cyclic1Report {
        n,
        schreier_generator_count,
        expected_generator_count: n * n - n + 1,
        index: n,
        nielsen_schreier_rank,
        rank_consistent: schreier_generator_count == n * n - n + 1 && schreier_generator_count == nielsen_schreier_rank,
        s_power_word: sn.word,
        s_power_is_translation,
        formulas,
        mismatches,
        printed_mismatches,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct T4Report {
    pub n: usize,
    pub w: FreeWord,
    pub m: i64,
    pub w0: FreeWord,
    pub window: i64,
    pub shift: i64,
    /// `(s·w0⁻¹)⁻¹ z_{j,k} (s·w0⁻¹) = z_{j,k-m-1}` on the window.
    pub shift_law_holds: bool,
    /// `s⁻¹ z_{j,k} s = w0⁻¹ z_{j,k-m-1} w0`.
    pub raw_conjugation_holds: bool,
    pub shift_failures: Vec<String>,
    pub direct_product_regime: bool,
    pub fundamental_domain: Vec<i64>,
    pub domain_generator_count: usize,
    pub expected_domain_count: usize,
    pub rank: Option<usize>,
    pub printed_recurrence: Vec<u64>,
    pub rank_formula_recurrence: Vec<u64>,
    pub recurrence_consistent: bool,
}

impl T4Report {
    pub fn ok(&self) -> bool {
        self.shift_law_holds
            && self.raw_conjugation_holds
            && (self.direct_product_regime || self.domain_generator_count == self.expected_domain_count)
    }
}

pub const DEFAULT_T4_WINDOW: i64 = 6;

fn recurrences(len: usize) -> (Vec<u64>, Vec<u64>) {
    let printed = std::iter::successors(Some(2u64), |r| Some(2 * r + 1)).take(len).collect();
    // rank |(m+1)(n-1)|+1 at m = 1 on F_{r_k}
    let formula = std::iter::successors(Some(2u64), |r| Some(2 * (r - 1) + 1)).take(len).collect();
    (printed, formula)
}

pub fn verify_t4(n: usize, w: &FreeWord, window: i64) -> Result<T4Report> {
    if w.rank() != n {
        return Err(Error::RankMismatch(n, w.rank()));
    }
    if w.is_identity() {
        return Err(Error::PreconditionFails("w must not be the identity".into()));
    }
    let m = w.exp_sum();
    let shift = m + 1;
    let fundamental_domain: Vec<i64> = match shift {
        s if s > 0 => (1..=s).collect(),
        s if s < 0 => (m + 2..=0).collect(),
        _ => Vec::new(),
    };
    let needed = fundamental_domain.iter().map(|k| k.abs()).max().unwrap_or(0);
    if needed > window {
        return Err(Error::WindowTooSmall { window, needed });
    }

    let theta = FreeAutomorphism::inner(w.clone());
    let r = SchreierRewriter::new(n, Modulus::Infinite);
    let z = |j: usize, k: i64| r.expand_gen(SchreierGen::Z { j, k });
    let w0 = FreeWord::generator(n, 1, -m).mul_unchecked(w);
    let s = HolElement::new(1, FreeWord::generator(n, 1, 1));
    let u = s.mul(&HolElement::translation(w0.inv()), &theta);

    let mut shift_failures = Vec::new();
    let mut raw_conjugation_holds = true;
    for j in 2..=n {
        for k in -window..=window {
            let zk = HolElement::translation(z(j, k));
            let target = z(j, k - shift);
            if zk.conjugate_by(&u, &theta) != HolElement::translation(target.clone()) {
                shift_failures.push(format!("z{{{j},{k}}}"));
            }
            let raw = zk.conjugate_by(&s, &theta);
            raw_conjugation_holds &= raw == HolElement::translation(w0.inv().mul_unchecked(&target).mul_unchecked(&w0));
        }
    }

    let period = shift.unsigned_abs() as i64;
    let residues_complete = shift == 0
        || (-window..=window).all(|k| fundamental_domain.iter().filter(|&&d| (k - d).rem_euclid(period) == 0).count() == 1);
    let domain_generator_count = if residues_complete { fundamental_domain.len() * (n - 1) } else { 0 };
    let expected_domain_count = shift.unsigned_abs() as usize * (n - 1);
    let (printed_recurrence, rank_formula_recurrence) = recurrences(4);
    Ok(T4Report {
        n,
        w: w.clone(),
        m,
        w0,
        window,
        shift,
        shift_law_holds: shift_failures.is_empty(),
        raw_conjugation_holds,
        shift_failures,
        direct_product_regime: shift == 0,
        fundamental_domain,
        domain_generator_count,
        expected_domain_count,
        rank: (shift != 0).then_some(expected_domain_count + 1),
        recurrence_consistent: printed_recurrence == rank_formula_recurrence,
        printed_recurrence,
        rank_formula_recurrence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic1_n2() {
        let r = verify_cyclic1(2).unwrap();
        assert_eq!(r.schreier_generator_count, 3);
        let y1 = r.formulas.iter().find(|f| f.id == "s^-1 y1 s").unwrap();
        assert_eq!(y1.lhs, FreeWord::parse("x2^2", 2).unwrap());
        assert!(y1.holds);
        assert_eq!(r.s_power_word, FreeWord::parse("x1 x2", 2).unwrap());
        assert!(r.ok());
        assert_eq!(r.printed_mismatches, vec!["s^n".to_string()]);
    }

    #[test]
    fn cyclic1_up_to_6() {
        for n in 2..=6 {
            let r = verify_cyclic1(n).unwrap();
            assert!(r.ok(), "n = {n}: {:?}", r.mismatches);
            assert_eq!(r.schreier_generator_count, n * n - n + 1);
        }
    }

    #[test]
    fn printed_y_formula_differs_from_its_derivation() {
        // s⁻¹y₄s = x₄² x₃ x₄ for n = 4, while the printed right side expands to x₄² x₂ x₄
        let r = verify_cyclic1(4).unwrap();
        let f = r.formulas.iter().find(|f| f.id == "s^-1 y4 s").unwrap();
        assert_eq!(f.lhs, FreeWord::parse("x4^2 x3 x4", 4).unwrap());
        assert!(f.holds && !f.printed_holds);
    }

    #[test]
    fn t4_examples() {
        let w = FreeWord::parse("x1", 2).unwrap();
        let r = verify_t4(2, &w, DEFAULT_T4_WINDOW).unwrap();
        assert_eq!((r.m, r.shift, r.rank), (1, 2, Some(3)));
        assert!(r.ok());

        let w = FreeWord::parse("x2 x1 x2^-1", 2).unwrap();
        let r = verify_t4(2, &w, DEFAULT_T4_WINDOW).unwrap();
        assert!(!r.w0.is_identity());
        assert!(r.ok());

        let w = FreeWord::parse("x2^-1", 2).unwrap();
        let r = verify_t4(2, &w, DEFAULT_T4_WINDOW).unwrap();
        assert!(r.direct_product_regime && r.ok() && r.rank.is_none());

        assert_eq!(r.printed_recurrence, vec![2, 5, 11, 23]);
        assert_eq!(r.rank_formula_recurrence, vec![2, 3, 5, 9]);
        assert!(!r.recurrence_consistent);

        let w = FreeWord::parse("x1^9", 2).unwrap();
        assert!(matches!(verify_t4(2, &w, 6), Err(Error::WindowTooSmall { window: 6, needed: 10 })));
    }
}
