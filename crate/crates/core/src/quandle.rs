//! Finite quandles over the carrier `{0, .., n-1}`.
//!
//! A [`Quandle`] stores the full Cayley tables of `*` and its right inverse
//! `~` (written x ∗̄ y in the literature). The inverse table is always
//! derived by inverting the columns of the `*` table.

use std::fmt;

use crate::error::{AxiomViolation, Error, Result};
use crate::uf::UnionFind;

/// An element of a finite carrier, as a 0-based index.
pub type Element = usize;

/// Sign of a letter in a free-group word, or of a copy in a symmetric double.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Records which closed-form family a quandle was built from, so that
/// reports can use family-specific class names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Dihedral(usize),
    DihedralDouble(usize),
}

/// How much of the axiom check to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Validation {
    /// Collect every violation.
    #[default]
    Exhaustive,
    /// Stop at the first violation found.
    FailFast,
}

#[derive(Clone, Debug)]
pub struct Quandle {
    n: usize,
    op: Vec<Element>,
    inv: Vec<Element>,
    family: Option<Family>,
}

impl PartialEq for Quandle {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.op == other.op
    }
}

impl Eq for Quandle {}

/// Validates an operation table (`table[x][y] = x * y`) against Q1–Q3.
pub fn validate_quandle(table: &[Vec<Element>]) -> Result<Quandle> {
    validate_quandle_with(table, Validation::Exhaustive)
}

pub fn validate_quandle_with(table: &[Vec<Element>], mode: Validation) -> Result<Quandle> {
    let n = table.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != n {
            return Err(Error::NotSquare {
                row,
                len: entries.len(),
                n,
            });
        }
        if let Some(&value) = entries.iter().find(|&&v| v >= n) {
            return Err(Error::OutOfRange { value, n });
        }
    }
    let op: Vec<Element> = table.iter().flatten().copied().collect();
    check_axioms(n, &op, mode)?;
    let inv = invert_columns(n, &op).expect("columns checked to be bijective");
    Ok(Quandle {
        n,
        op,
        inv,
        family: None,
    })
}

fn check_axioms(n: usize, op: &[Element], mode: Validation) -> Result<()> {
    let at = |x: usize, y: usize| op[x * n + y];
    let mut violations = Vec::new();
    let stop = |v: &Vec<AxiomViolation>| mode == Validation::FailFast && !v.is_empty();

    for x in 0..n {
        if at(x, x) != x {
            violations.push(AxiomViolation::Idempotence { x, got: at(x, x) });
            if stop(&violations) {
                return Err(Error::Axioms(violations));
            }
        }
    }
    for y in 0..n {
        let mut first_preimage = vec![usize::MAX; n];
        for x in 0..n {
            let img = at(x, y);
            if first_preimage[img] == usize::MAX {
                first_preimage[img] = x;
            } else {
                violations.push(AxiomViolation::NotBijective {
                    y,
                    x1: first_preimage[img],
                    x2: x,
                });
                if stop(&violations) {
                    return Err(Error::Axioms(violations));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = at(x, y);
            for z in 0..n {
                if at(xy, z) != at(at(x, z), at(y, z)) {
                    violations.push(AxiomViolation::Distributivity { x, y, z });
                    if stop(&violations) {
                        return Err(Error::Axioms(violations));
                    }
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        violations.sort();
        Err(Error::Axioms(violations))
    }
}

fn invert_columns(n: usize, op: &[Element]) -> Option<Vec<Element>> {
    let mut inv = vec![usize::MAX; n * n];
    for y in 0..n {
        for x in 0..n {
            let img = op[x * n + y];
            if inv[img * n + y] != usize::MAX {
                return None;
            }
            inv[img * n + y] = x;
        }
    }
    Some(inv)
}

impl Quandle {
    /// Builds a quandle from a table known to satisfy the axioms.
    /// Debug builds still run the full check.
    pub(crate) fn from_trusted(n: usize, op: Vec<Element>, family: Option<Family>) -> Quandle {
        debug_assert_eq!(op.len(), n * n);
        debug_assert!(n > 60 || check_axioms(n, &op, Validation::FailFast).is_ok());
        let inv = invert_columns(n, &op).expect("trusted table has bijective columns");
        Quandle { n, op, inv, family }
    }

    /// Validates `table` and, if supplied, cross-checks an inverse table
    /// against the derived one.
    pub fn with_inverse(table: &[Vec<Element>], inverse: &[Vec<Element>]) -> Result<Quandle> {
        let q = validate_quandle(table)?;
        if inverse.len() != q.n {
            return Err(Error::SizeMismatch {
                expected: q.n,
                got: inverse.len(),
            });
        }
        for (x, row) in inverse.iter().enumerate() {
            if row.len() != q.n {
                return Err(Error::NotSquare {
                    row: x,
                    len: row.len(),
                    n: q.n,
                });
            }
            for (y, &v) in row.iter().enumerate() {
                if v != q.bar(x, y) {
                    return Err(Error::InverseMismatch { x, y });
                }
            }
        }
        Ok(q)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    /// `x * y` without range checks.
    #[inline]
    pub fn star(&self, x: Element, y: Element) -> Element {
        self.op[x * self.n + y]
    }

    /// `x ~ y` (the inverse operation) without range checks.
    #[inline]
    pub fn bar(&self, x: Element, y: Element) -> Element {
        self.inv[x * self.n + y]
    }

    /// `x * y` for `sign == Plus`, `x ~ y` for `sign == Minus`.
    #[inline]
    pub fn star_signed(&self, x: Element, y: Element, sign: Sign) -> Element {
        match sign {
            Sign::Plus => self.star(x, y),
            Sign::Minus => self.bar(x, y),
        }
    }

    pub fn check(&self, x: Element) -> Result<Element> {
        if x < self.n {
            Ok(x)
        } else {
            Err(Error::OutOfRange { value: x, n: self.n })
        }
    }

    pub fn op(&self, x: Element, y: Element) -> Result<Element> {
        Ok(self.star(self.check(x)?, self.check(y)?))
    }

    pub fn inv_op(&self, x: Element, y: Element) -> Result<Element> {
        Ok(self.bar(self.check(x)?, self.check(y)?))
    }

    /// Column `y` of the `*` table: the right translation `x -> x * y`.
    pub fn right_translation(&self, y: Element) -> Vec<Element> {
        (0..self.n).map(|x| self.star(x, y)).collect()
    }

    pub fn table(&self) -> Vec<Vec<Element>> {
        self.op.chunks(self.n).map(<[Element]>::to_vec).collect()
    }

    pub fn inverse_table(&self) -> Vec<Vec<Element>> {
        self.inv.chunks(self.n).map(<[Element]>::to_vec).collect()
    }

    /// Right action of a free-group word: `x * w1 * w2 ...`, folding left,
    /// with negative letters acting by `~`.
    pub fn act_word(&self, x: Element, word: &[(Element, Sign)]) -> Result<Element> {
        let mut acc = self.check(x)?;
        for &(letter, sign) in word {
            acc = self.star_signed(acc, self.check(letter)?, sign);
        }
        Ok(acc)
    }

    /// Left action `g . x = x . g^-1`.
    pub fn left_act_word(&self, word: &[(Element, Sign)], x: Element) -> Result<Element> {
        let inverse: Vec<(Element, Sign)> = word.iter().rev().map(|&(l, s)| (l, s.flip())).collect();
        self.act_word(x, &inverse)
    }

    /// Orbits of the carrier under all right translations, each sorted,
    /// listed by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Element>> {
        let mut uf = UnionFind::new(self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                uf.union(x, self.star(x, y));
            }
        }
        uf.blocks()
    }
}

/// `Z/nZ` with `x * y = x ~ y = 2y - x`.
pub fn make_dihedral(n: usize) -> Result<Quandle> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut op = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            op.push((2 * y + n - x) % n);
        }
    }
    Ok(Quandle::from_trusted(n, op, Some(Family::Dihedral(n))))
}

/// The trivial quandle `x * y = x`.
pub fn make_trivial(n: usize) -> Result<Quandle> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let op = (0..n).flat_map(|x| std::iter::repeat_n(x, n)).collect();
    Ok(Quandle::from_trusted(n, op, None))
}

/// The conjugation quandle `a * b = b^-1 a b` of a group given by its
/// Cayley table (`group[g][h] = gh`, identity at index 0) and inverse map.
pub fn make_conjugation(group: &[Vec<Element>], inverse: &[Element]) -> Result<Quandle> {
    let n = group.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    for (row, entries) in group.iter().enumerate() {
        if entries.len() != n {
            return Err(Error::NotSquare {
                row,
                len: entries.len(),
                n,
            });
        }
        if let Some(&value) = entries.iter().find(|&&v| v >= n) {
            return Err(Error::OutOfRange { value, n });
        }
    }
    if inverse.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: inverse.len(),
        });
    }
    if let Some(&value) = inverse.iter().find(|&&v| v >= n) {
        return Err(Error::OutOfRange { value, n });
    }
    let mul = |g: usize, h: usize| group[g][h];
    for g in 0..n {
        if mul(0, g) != g || mul(g, 0) != g {
            return Err(Error::NotGroup(format!("0 is not an identity for {g}")));
        }
        if mul(g, inverse[g]) != 0 || mul(inverse[g], g) != 0 {
            return Err(Error::NotGroup(format!("{} is not the inverse of {g}", inverse[g])));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(Error::NotGroup(format!("associativity fails at ({a}, {b}, {c})")));
                }
            }
        }
    }
    let mut op = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            op.push(mul(mul(inverse[b], a), b));
        }
    }
    Ok(Quandle::from_trusted(n, op, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3_table() -> Vec<Vec<usize>> {
        vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]
    }

    #[test]
    fn r3_table_is_a_quandle() {
        let q = validate_quandle(&r3_table()).unwrap();
        assert_eq!(q, make_dihedral(3).unwrap());
        assert_eq!(q.inverse_table(), r3_table());
    }

    #[test]
    fn idempotence_violation_reports_witness() {
        // n = 2, 1 * 1 = 0
        let err = validate_quandle(&[vec![0, 0], vec![1, 0]]).unwrap_err();
        let Error::Axioms(v) = err else { panic!("{err}") };
        assert!(v.contains(&AxiomViolation::Idempotence { x: 1, got: 0 }));
    }

    #[test]
    fn trivial_tables_validate() {
        for n in 1..=8 {
            let table: Vec<Vec<usize>> = (0..n).map(|x| vec![x; n]).collect();
            let q = validate_quandle(&table).unwrap();
            assert_eq!(q, make_trivial(n).unwrap());
        }
        assert_eq!(make_trivial(2).unwrap().op(0, 1).unwrap(), 0);
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(validate_quandle(&[]), Err(Error::Empty)));
        assert!(matches!(
            validate_quandle(&[vec![0, 1], vec![1]]),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            validate_quandle(&[vec![0, 2], vec![1, 1]]),
            Err(Error::OutOfRange { value: 2, n: 2 })
        ));
    }

    #[test]
    fn non_bijective_column_is_reported() {
        // Column 1 maps both 0 and 1 to 1.
        let err = validate_quandle(&[vec![0, 1], vec![0, 1]]).unwrap_err();
        let Error::Axioms(v) = err else { panic!() };
        assert!(v.contains(&AxiomViolation::NotBijective { y: 1, x1: 0, x2: 1 }));
        let fast = validate_quandle_with(&[vec![0, 1], vec![0, 1]], Validation::FailFast);
        let Err(Error::Axioms(v)) = fast else { panic!() };
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn op_examples() {
        let r5 = make_dihedral(5).unwrap();
        assert_eq!(r5.op(1, 3).unwrap(), 0);
        let r3 = make_dihedral(3).unwrap();
        assert_eq!(r3.inv_op(0, 1).unwrap(), 2);
        assert_eq!(r3.op(0, 1).unwrap(), 2);
        assert!(matches!(r3.op(3, 0), Err(Error::OutOfRange { value: 3, n: 3 })));
        let t = make_trivial(4).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(t.inv_op(x, y).unwrap(), x);
            }
        }
    }

    #[test]
    fn act_word_folds_left() {
        let q = make_dihedral(7).unwrap();
        let (x, a, b, c, d) = (1, 2, 5, 3, 6);
        let word = [(a, Sign::Plus), (b, Sign::Plus), (c, Sign::Minus), (d, Sign::Plus)];
        let expected = q.star(q.bar(q.star(q.star(x, a), b), c), d);
        assert_eq!(q.act_word(x, &word).unwrap(), expected);
        assert_eq!(q.act_word(4, &[]).unwrap(), 4);
        let r3 = make_dihedral(3).unwrap();
        assert_eq!(r3.act_word(0, &[(1, Sign::Plus)]).unwrap(), 2);
        assert!(r3.act_word(0, &[(5, Sign::Plus)]).is_err());
    }

    #[test]
    fn left_action_inverts_right_action() {
        let q = make_conjugation(&s3().0, &s3().1).unwrap();
        let word = [(1, Sign::Plus), (4, Sign::Minus), (2, Sign::Plus)];
        for x in 0..q.len() {
            let y = q.act_word(x, &word).unwrap();
            assert_eq!(q.left_act_word(&word, y).unwrap(), x);
        }
    }

    #[test]
    fn dihedral_small_cases() {
        let r1 = make_dihedral(1).unwrap();
        assert_eq!(r1.star(0, 0), 0);
        let r6 = make_dihedral(6).unwrap();
        assert_eq!(r6.op(1, 4).unwrap(), 1);
        // brute-force table build
        for x in 0..6i64 {
            for y in 0..6i64 {
                assert_eq!(r6.star(x as usize, y as usize) as i64, (2 * y - x).rem_euclid(6));
            }
        }
        assert!(matches!(make_dihedral(0), Err(Error::Empty)));
        assert!(matches!(make_trivial(0), Err(Error::Empty)));
    }

    /// S3 as permutations of {0,1,2}; index 0 is the identity.
    pub(crate) fn s3() -> (Vec<Vec<usize>>, Vec<usize>) {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        // (g h)(i) = h(g(i)): apply g first.
        let compose = |g: [usize; 3], h: [usize; 3]| [h[g[0]], h[g[1]], h[g[2]]];
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|&g| perms.iter().map(|&h| index(compose(g, h))).collect())
            .collect();
        let inverse = (0..6).map(|g| (0..6).find(|&h| table[g][h] == 0).unwrap()).collect();
        (table, inverse)
    }

    #[test]
    fn conjugation_quandle_of_s3() {
        let (table, inverse) = s3();
        let q = make_conjugation(&table, &inverse).unwrap();
        assert!(validate_quandle(&q.table()).is_ok());
        for g in 0..6 {
            assert_eq!(q.star(0, g), 0);
            assert_eq!(q.star(g, g), g);
        }
        // Transpositions are indices 1, 2, 3: conjugating one by another
        // gives the third.
        for a in 1..=3 {
            for b in 1..=3 {
                let expected = if a == b { a } else { 6 - a - b };
                assert_eq!(q.star(a, b), expected);
                assert_eq!(q.bar(a, b), expected);
            }
        }
        // 3-cycles are swapped by conjugation with a transposition.
        assert_eq!(q.star(4, 1), 5);
        assert_eq!(q.star(5, 1), 4);
    }

    #[test]
    fn conjugation_rejects_non_groups() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(make_conjugation(&bad, &[0, 1]), Err(Error::NotGroup(_))));
        let z2 = vec![vec![0, 1], vec![1, 0]];
        assert!(matches!(make_conjugation(&z2, &[0, 0]), Err(Error::NotGroup(_))));
        assert!(make_conjugation(&z2, &[0, 1]).is_ok());
        // identity not at 0
        let shifted = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(make_conjugation(&shifted, &[1, 0]), Err(Error::NotGroup(_))));
        // a quasigroup that is not associative: x*y = -x-y mod 3 shifted
        let nonassoc = vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 2, 0]];
        assert!(make_conjugation(&nonassoc, &[0, 1, 2]).is_err());
    }

    #[test]
    fn components_match_known_cases() {
        assert_eq!(
            make_dihedral(5).unwrap().connected_components(),
            vec![vec![0, 1, 2, 3, 4]]
        );
        assert_eq!(
            make_dihedral(6).unwrap().connected_components(),
            vec![vec![0, 2, 4], vec![1, 3, 5]]
        );
        assert_eq!(
            make_trivial(4).unwrap().connected_components(),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn inverse_table_cross_check() {
        let t = r3_table();
        assert!(Quandle::with_inverse(&t, &t).is_ok());
        let mut wrong = t.clone();
        wrong[0].swap(1, 2);
        assert!(matches!(
            Quandle::with_inverse(&t, &wrong),
            Err(Error::InverseMismatch { x: 0, y: 1 })
        ));
    }
}
