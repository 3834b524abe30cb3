//! Permutations of {1..m} and word evaluation over named generators.

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A permutation of `{1, ..., m}` stored as a 0-indexed image array.
///
/// Composition follows function application: `(p * q)(x) = p(q(x))`, i.e.
/// the right factor acts first. A group word written left to right is the
/// fold of this product.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    /// Builds from a 0-indexed image array; must be a bijection.
    pub fn from_images(img: Vec<usize>) -> Result<Self> {
        let m = img.len();
        let mut seen = vec![false; m];
        for &v in &img {
            if v >= m || seen[v] {
                return Err(Error::Domain(format!(
                    "image array {img:?} is not a bijection on 0..{m}"
                )));
            }
            seen[v] = true;
        }
        Ok(Perm { img })
    }

    /// Builds from a 1-indexed image array (as printed in fixtures).
    pub fn from_one_indexed(img: &[usize]) -> Result<Self> {
        if img.iter().any(|&v| v == 0) {
            return Err(Error::Domain("1-indexed images must be >= 1".into()));
        }
        Self::from_images(img.iter().map(|&v| v - 1).collect())
    }

    pub fn identity(m: usize) -> Self {
        Perm {
            img: (0..m).collect(),
        }
    }

    /// Builds from disjoint cycles over `{1..m}`, e.g. `&[&[1,2,3,4]]`.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut img: Vec<usize> = (0..m).collect();
        let mut touched = vec![false; m];
        for cyc in cycles {
            for win in 0..cyc.len() {
                let from = cyc[win];
                let to = cyc[(win + 1) % cyc.len()];
                if from == 0 || from > m || to == 0 || to > m {
                    return Err(Error::Domain(format!(
                        "cycle entry out of range 1..={m}"
                    )));
                }
                if touched[from - 1] {
                    return Err(Error::Domain("cycles are not disjoint".into()));
                }
                touched[from - 1] = true;
                img[from - 1] = to - 1;
            }
        }
        Self::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.img[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn one_indexed_images(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v + 1).collect()
    }

    /// `(self * rhs)(x) = self(rhs(x))`.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree(), rhs.degree(), "mismatched degrees");
        Perm {
            img: rhs.img.iter().map(|&x| self.img[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut img = vec![0; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v] = i;
        }
        Perm { img }
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut acc = self.clone();
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.compose(self).compose(&g.inverse())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Perm::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    /// Cycle lengths in decreasing order, including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut lens = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.img[x];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// All `m!` permutations of degree `m` (guarded to desk scale).
    pub fn all(m: usize) -> Vec<Perm> {
        assert!(m <= 8, "full symmetric group enumeration capped at degree 8");
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..m).collect();
        heap_permute(&mut idx, m, &mut out);
        out.sort();
        out
    }
}

fn heap_permute(idx: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
    if k <= 1 {
        out.push(Perm { img: idx.clone() });
        return;
    }
    for i in 0..k {
        heap_permute(idx, k - 1, out);
        if k % 2 == 0 {
            idx.swap(i, k - 1);
        } else {
            idx.swap(0, k - 1);
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let m = self.degree();
        let mut seen = vec![false; m];
        for start in 0..m {
            if seen[start] || self.img[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.img[x];
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Evaluates a group word over named generators, left to right.
///
/// Grammar: a word is a sequence of items; an item is a generator letter or
/// a parenthesized word, optionally followed by `^` and a (possibly
/// negative) integer exponent. Whitespace is ignored. The empty word is the
/// identity.
pub fn word_eval(word: &str, assignment: &BTreeMap<char, Perm>, degree: usize) -> Result<Perm> {
    let chars: Vec<char> = word.chars().collect();
    let mut pos = 0;
    let result = eval_seq(&chars, &mut pos, assignment, degree)?;
    if pos != chars.len() {
        return Err(Error::Parse {
            pos,
            msg: format!("unexpected '{}' in word", chars[pos]),
        });
    }
    Ok(result)
}

fn eval_seq(
    chars: &[char],
    pos: &mut usize,
    assignment: &BTreeMap<char, Perm>,
    degree: usize,
) -> Result<Perm> {
    let mut acc = Perm::identity(degree);
    loop {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
        if *pos >= chars.len() || chars[*pos] == ')' {
            return Ok(acc);
        }
        let c = chars[*pos];
        let base = if c == '(' {
            *pos += 1;
            let inner = eval_seq(chars, pos, assignment, degree)?;
            if *pos >= chars.len() || chars[*pos] != ')' {
                return Err(Error::Parse {
                    pos: *pos,
                    msg: "unclosed parenthesis in word".into(),
                });
            }
            *pos += 1;
            inner
        } else if c.is_alphabetic() {
            *pos += 1;
            assignment
                .get(&c)
                .cloned()
                .ok_or_else(|| Error::Parse {
                    pos: *pos - 1,
                    msg: format!("unbound generator letter '{c}'"),
                })?
        } else {
            return Err(Error::Parse {
                pos: *pos,
                msg: format!("unexpected character '{c}' in word"),
            });
        };
        let item = if *pos < chars.len() && chars[*pos] == '^' {
            *pos += 1;
            let mut neg = false;
            if *pos < chars.len() && chars[*pos] == '-' {
                neg = true;
                *pos += 1;
            }
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if start == *pos {
                return Err(Error::Parse {
                    pos: *pos,
                    msg: "exponent digits expected after '^'".into(),
                });
            }
            let e: i64 = chars[start..*pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse {
                    pos: start,
                    msg: "exponent out of range".into(),
                })?;
            base.pow(if neg { -e } else { e })
        } else {
            base
        };
        acc = acc.compose(&item);
    }
}

/// The standard generators of S4 in its two-generator presentation with
/// `A^4 = B^2 = (BA)^3 = 1`: `A = (1 2 3 4)`, `B = (1 2)`.
pub fn s4_standard_generators() -> (Perm, Perm) {
    let a = Perm::from_cycles(4, &[&[1, 2, 3, 4]]).expect("valid cycle");
    let b = Perm::from_cycles(4, &[&[1, 2]]).expect("valid cycle");
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4_assignment() -> BTreeMap<char, Perm> {
        let (a, b) = s4_standard_generators();
        BTreeMap::from([('A', a), ('B', b)])
    }

    #[test]
    fn presentation_relations() {
        let (a, b) = s4_standard_generators();
        assert_eq!(a.order(), 4);
        assert_eq!(b.order(), 2);
        assert_eq!(b.compose(&a).order(), 3);
    }

    #[test]
    fn word_evaluation() {
        let asg = s4_assignment();
        assert!(word_eval("(BA)^3", &asg, 4).unwrap().is_identity());
        assert!(word_eval("A^4", &asg, 4).unwrap().is_identity());
        assert!(word_eval("", &asg, 4).unwrap().is_identity());
        assert!(word_eval("B^2", &asg, 4).unwrap().is_identity());
        // ABA^-1 = (2 3)
        let aba = word_eval("ABA^-1", &asg, 4).unwrap();
        assert_eq!(aba, Perm::from_cycles(4, &[&[2, 3]]).unwrap());
        // (BA)B(BA)^-1 = (1 3)
        let w = word_eval("(BA)B(BA)^-1", &asg, 4).unwrap();
        assert_eq!(w, Perm::from_cycles(4, &[&[1, 3]]).unwrap());
    }

    #[test]
    fn unbound_letter_rejected() {
        let asg = s4_assignment();
        assert!(matches!(
            word_eval("AC", &asg, 4),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn composition_convention() {
        // (B * A)(1): A first sends 1 -> 2, then B sends 2 -> 1
        let (a, b) = s4_standard_generators();
        let ba = b.compose(&a);
        assert_eq!(ba.apply(0), 0);
        // BA = (2 3 4)
        assert_eq!(ba, Perm::from_cycles(4, &[&[2, 3, 4]]).unwrap());
    }

    #[test]
    fn cycle_type_and_order() {
        let (a, _) = s4_standard_generators();
        assert_eq!(a.cycle_type(), vec![4]);
        assert_eq!(a.pow(2).cycle_type(), vec![2, 2]);
        assert_eq!(a.pow(2).order(), 2);
        assert_eq!(a.pow(-1), a.inverse());
    }

    #[test]
    fn all_s4() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.order() == 2).count(), 9);
        assert_eq!(all.iter().filter(|p| p.order() == 3).count(), 8);
    }

    #[test]
    fn display_cycles() {
        let (a, b) = s4_standard_generators();
        assert_eq!(a.to_string(), "(1 2 3 4)");
        assert_eq!(b.to_string(), "(1 2)");
        assert_eq!(a.pow(2).to_string(), "(1 3)(2 4)");
        assert_eq!(Perm::identity(4).to_string(), "id");
    }
}
