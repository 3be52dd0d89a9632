//! Exact arithmetic in `Z[ζ]` for `ζ` a primitive `2^{s-1}`-th root of unity,
//! and finite 2×2 matrix groups over it.
//!
//! `Z[ζ] = Z[x]/(x^L + 1)` with `L = 2^{s-2}`; reduction is negacyclic.
//! For `s = 3` this is `Z[i]`. The fourth root of unity is `i = x^{L/2}`.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom, Subgroup};

pub const MAX_CYCLO_EXPONENT: u32 = 8;
pub const DEFAULT_MATRIX_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloElem {
    coeffs: Vec<i64>,
}

impl CycloElem {
    fn len_for(s: u32) -> usize {
        1 << (s - 2)
    }

    pub fn zero(s: u32) -> Self {
        CycloElem {
            coeffs: vec![0; Self::len_for(s)],
        }
    }

    pub fn one(s: u32) -> Self {
        Self::zeta_pow(s, 0)
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(s: u32, k: i64) -> Self {
        let l = Self::len_for(s) as i64;
        let k = k.rem_euclid(2 * l);
        let mut e = Self::zero(s);
        if k < l {
            e.coeffs[k as usize] = 1;
        } else {
            e.coeffs[(k - l) as usize] = -1;
        }
        e
    }

    /// The primitive fourth root of unity `ζ^{L/2}`.
    pub fn i(s: u32) -> Self {
        Self::zeta_pow(s, (Self::len_for(s) / 2) as i64)
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() < 2 || !coeffs.len().is_power_of_two() {
            return Err(Error::OutOfRange("coefficient length must be 2^(s-2) ≥ 2".into()));
        }
        Ok(CycloElem { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Little-endian bytes of the coefficients.
    pub fn encode(&self) -> Vec<u8> {
        self.coeffs.iter().flat_map(|c| c.to_le_bytes()).collect()
    }

    pub fn decode(bytes: &[u8]) -> Result<Self> {
        if !bytes.len().is_multiple_of(8) {
            return Err(Error::OutOfRange("encoded length is not a multiple of 8".into()));
        }
        let coeffs = bytes
            .chunks_exact(8)
            .map(|c| i64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Self::from_coeffs(coeffs)
    }
}

impl Add for &CycloElem {
    type Output = CycloElem;

    fn add(self, rhs: &CycloElem) -> CycloElem {
        debug_assert_eq!(self.coeffs.len(), rhs.coeffs.len());
        CycloElem {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;

    fn neg(self) -> CycloElem {
        CycloElem {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CycloElem {
    type Output = CycloElem;

    fn mul(self, rhs: &CycloElem) -> CycloElem {
        let l = self.coeffs.len();
        debug_assert_eq!(l, rhs.coeffs.len());
        let mut out = vec![0i64; l];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let k = i + j;
                if k < l {
                    out[k] += a * b;
                } else {
                    out[k - l] -= a * b;
                }
            }
        }
        CycloElem { coeffs: out }
    }
}

/// Row-major 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2Cyclo {
    pub a: CycloElem,
    pub b: CycloElem,
    pub c: CycloElem,
    pub d: CycloElem,
}

impl Mat2Cyclo {
    pub fn identity(s: u32) -> Self {
        Mat2Cyclo {
            a: CycloElem::one(s),
            b: CycloElem::zero(s),
            c: CycloElem::zero(s),
            d: CycloElem::one(s),
        }
    }

    pub fn diag(x: CycloElem, y: CycloElem) -> Self {
        let z = CycloElem {
            coeffs: vec![0; x.coeffs.len()],
        };
        Mat2Cyclo {
            a: x,
            b: z.clone(),
            c: z,
            d: y,
        }
    }

    pub fn antidiag(x: CycloElem, y: CycloElem) -> Self {
        let z = CycloElem {
            coeffs: vec![0; x.coeffs.len()],
        };
        Mat2Cyclo {
            a: z.clone(),
            b: x,
            c: y,
            d: z,
        }
    }

    pub fn scale(&self, k: &CycloElem) -> Self {
        Mat2Cyclo {
            a: k * &self.a,
            b: k * &self.b,
            c: k * &self.c,
            d: k * &self.d,
        }
    }

    pub fn mul(&self, o: &Mat2Cyclo) -> Mat2Cyclo {
        Mat2Cyclo {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// Canonical byte encoding: the four entries' encodings in order.
    pub fn encode(&self) -> Vec<u8> {
        [&self.a, &self.b, &self.c, &self.d].iter().flat_map(|e| e.encode()).collect()
    }
}

/// A finite matrix group with its induced Cayley table.
#[derive(Clone, Debug)]
pub struct MatrixClosure {
    elements: Vec<Mat2Cyclo>,
    index: HashMap<Vec<u8>, usize>,
    group: FiniteGroup,
}

impl MatrixClosure {
    pub fn elements(&self) -> &[Mat2Cyclo] {
        &self.elements
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn find(&self, m: &Mat2Cyclo) -> Option<usize> {
        self.index.get(&m.encode()).copied()
    }
}

/// Generators of the three 2-group families in GL(2, C):
///
/// * `t = 1`: `i·diag(ζ, ζ⁻¹)` and `antidiag(i, i)` (requires `s ≥ 4`)
/// * `t = 2`: `diag(ζ, ζ⁻¹)` and `antidiag(1, 1)`
/// * `t = 3`: `diag(ζ, ζ⁻¹)` and `antidiag(i, i)`
pub fn lemma47_family(s: u32, t: u32) -> Result<Vec<Mat2Cyclo>> {
    let min_s = if t == 1 { 4 } else { 3 };
    if !(1..=3).contains(&t) || !(min_s..=MAX_CYCLO_EXPONENT).contains(&s) {
        return Err(Error::OutOfRange(format!(
            "family {t} is defined for {min_s} ≤ s ≤ {MAX_CYCLO_EXPONENT}, t ∈ {{1,2,3}}"
        )));
    }
    let zeta = CycloElem::zeta_pow(s, 1);
    let zeta_inv = CycloElem::zeta_pow(s, -1);
    let i = CycloElem::i(s);
    let rotation = Mat2Cyclo::diag(zeta, zeta_inv);
    Ok(match t {
        1 => vec![rotation.scale(&i), Mat2Cyclo::antidiag(i.clone(), i)],
        2 => vec![rotation, Mat2Cyclo::antidiag(CycloElem::one(s), CycloElem::one(s))],
        _ => vec![rotation, Mat2Cyclo::antidiag(i.clone(), i)],
    })
}

/// Breadth-first closure under right multiplication by the generators.
pub fn closure(gens: &[Mat2Cyclo], cap: usize) -> Result<MatrixClosure> {
    let Some(first) = gens.first() else {
        return Err(Error::OutOfRange("matrix closure needs at least one generator".into()));
    };
    let len = first.a.coeffs.len();
    if gens.iter().any(|g| [&g.a, &g.b, &g.c, &g.d].iter().any(|e| e.coeffs.len() != len)) {
        return Err(Error::Mismatch("generators live in different rings".into()));
    }
    let s = len.trailing_zeros() + 2;
    let mut elements = vec![Mat2Cyclo::identity(s)];
    let mut index = HashMap::new();
    index.insert(elements[0].encode(), 0);
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next].clone();
        for g in gens {
            let y = x.mul(g);
            if let Entry::Vacant(slot) = index.entry(y.encode()) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                slot.insert(elements.len());
                elements.push(y);
            }
        }
        next += 1;
    }
    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            table[i * n + j] = index[&x.mul(y).encode()] as u32;
        }
    }
    let mut generators: Vec<usize> = Vec::new();
    for g in gens {
        let id = index[&g.encode()];
        if id != 0 && !generators.contains(&id) {
            generators.push(id);
        }
    }
    let group = FiniteGroup::from_table(n, table, "matrix group")?.with_generators(generators)?;
    Ok(MatrixClosure {
        elements,
        index,
        group,
    })
}

/// `CycMat(s, t)`: the closure of [`lemma47_family`] as a group.
pub fn cyc_mat(s: u32, t: u32) -> Result<MatrixClosure> {
    let mut m = closure(&lemma47_family(s, t)?, DEFAULT_MATRIX_CAP)?;
    m.group = m.group.with_label(format!("CycMat({s},{t})"));
    Ok(m)
}

/// Image in PGL(2, C): the quotient by the scalar matrices.
pub fn projective_quotient(m: &MatrixClosure) -> Result<(FiniteGroup, GroupHom)> {
    let scalars: Vec<usize> = (0..m.elements.len()).filter(|&i| m.elements[i].is_scalar()).collect();
    let scalars = Subgroup::new(&m.group, &scalars)?;
    let (q, proj) = m.group.quotient(&scalars)?;
    Ok((q.with_label(format!("P{}", m.group.label())), proj))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relation() {
        for s in 3..=6 {
            let l = 1i64 << (s - 2);
            let prod = &CycloElem::zeta_pow(s, 1) * &CycloElem::zeta_pow(s, l - 1);
            assert_eq!(prod, -&CycloElem::one(s));
        }
        let x = CycloElem::from_coeffs(vec![1, 1, 0, 0]).unwrap();
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn zeta8_squared_is_i() {
        let z = CycloElem::zeta_pow(4, 1);
        let sq = &z * &z;
        assert_eq!(sq, CycloElem::i(4));
        assert_eq!(&sq * &sq, -&CycloElem::one(4));
    }

    #[test]
    fn encoding_round_trip() {
        let e = CycloElem::from_coeffs(vec![3, -1, 0, 7]).unwrap();
        assert_eq!(CycloElem::decode(&e.encode()).unwrap(), e);
        assert!(CycloElem::decode(&[1, 2, 3]).is_err());
    }

    #[test]
    fn family_ranges() {
        assert!(lemma47_family(3, 1).is_err());
        assert!(lemma47_family(9, 2).is_err());
        assert!(lemma47_family(4, 4).is_err());
        let g = lemma47_family(3, 2).unwrap();
        assert_eq!(g[0], Mat2Cyclo::diag(CycloElem::i(3), -&CycloElem::i(3)));
    }

    #[test]
    fn identity_closure_and_scalars() {
        let m = closure(&[Mat2Cyclo::identity(3)], 10).unwrap();
        assert_eq!(m.group().order(), 1);
        let minus = Mat2Cyclo::identity(3).scale(&-&CycloElem::one(3));
        let m = closure(&[minus], 10).unwrap();
        assert_eq!(m.group().order(), 2);
        assert_eq!(projective_quotient(&m).unwrap().0.order(), 1);
    }

    #[test]
    fn family_orders() {
        for s in 3..=6 {
            for t in 1..=3 {
                if t == 1 && s == 3 {
                    continue;
                }
                assert_eq!(cyc_mat(s, t).unwrap().group().order(), 1 << s, "s={s} t={t}");
            }
        }
    }

    #[test]
    fn closure_cap() {
        assert_eq!(
            closure(&lemma47_family(6, 2).unwrap(), 10).unwrap_err(),
            Error::CapExceeded { cap: 10 }
        );
    }
}
