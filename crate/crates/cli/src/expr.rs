//! Group expressions.
//!
//! ```text
//! expr    := term { "x" term }
//! term    := primary [ ":" primary "@" NAME ]
//! primary := atom [ "^" INT ] | "(" expr ")"
//! atom    := "C" INT | "D" INT | "Q" INT | "S" INT | "A" INT
//!          | "PSL" "(" "2" "," INT ")" | "Hess216" | "Fermat" INT | "Xd" INT
//!          | "CycMat" "(" INT "," INT ")"
//! ```
//!
//! `D n` and `Q n` take the group order. Whitespace between tokens is
//! ignored.

use std::fmt;

use realforms_core::builders::{
    build_alternating, build_cyclic, build_dihedral, build_fermat_aut, build_hessian216, build_psl2,
    build_quaternion, build_symmetric, direct_product, semidirect, xd_group, ActionSpec, ACTION_NAMES,
};
use realforms_core::cyclo::cyc_mat;
use realforms_core::{Error, FiniteGroup};

type AtomCtor = fn(usize) -> Atom;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    Symmetric(usize),
    Alternating(usize),
    Psl2(usize),
    Hessian216,
    Fermat(usize),
    Xd(usize),
    CycMat(u32, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Atom(Atom),
    /// `atom^k`, the direct product of `k` copies.
    Power(Atom, usize),
    Product(Box<GroupExpr>, Box<GroupExpr>),
    Semidirect {
        left: Box<GroupExpr>,
        right: Box<GroupExpr>,
        action: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {offset}: expected {}", expected.join(" | "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn fail<T>(&mut self, expected: &[&str]) -> Result<T, ParseError> {
        self.skip_ws();
        Err(ParseError {
            offset: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn expect(&mut self, lit: &str) -> Result<(), ParseError> {
        if self.eat(lit) {
            Ok(())
        } else {
            self.fail(&[&format!("\"{lit}\"")])
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse() {
            Ok(n) => Ok(n),
            Err(_) => {
                self.pos = start;
                self.fail(&["integer"])
            }
        }
    }

    fn expr(&mut self) -> Result<GroupExpr, ParseError> {
        let mut lhs = self.term()?;
        while self.eat("x") {
            let rhs = self.term()?;
            lhs = GroupExpr::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<GroupExpr, ParseError> {
        let left = self.primary()?;
        if !self.eat(":") {
            return Ok(left);
        }
        let right = self.primary()?;
        self.expect("@")?;
        let Some(&name) = ACTION_NAMES.iter().find(|n| self.eat(n)) else {
            return self.fail(&ACTION_NAMES);
        };
        Ok(GroupExpr::Semidirect {
            left: Box::new(left),
            right: Box::new(right),
            action: name.to_string(),
        })
    }

    fn primary(&mut self) -> Result<GroupExpr, ParseError> {
        if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(inner);
        }
        let atom = self.atom()?;
        if self.eat("^") {
            let k = self.int()?;
            return Ok(GroupExpr::Power(atom, k));
        }
        Ok(GroupExpr::Atom(atom))
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        if self.eat("PSL") {
            self.expect("(")?;
            self.expect("2")?;
            self.expect(",")?;
            let q = self.int()?;
            self.expect(")")?;
            return Ok(Atom::Psl2(q));
        }
        if self.eat("CycMat") {
            self.expect("(")?;
            let s = self.int()?;
            self.expect(",")?;
            let t = self.int()?;
            self.expect(")")?;
            return Ok(Atom::CycMat(s as u32, t as u32));
        }
        if self.eat("Hess216") {
            return Ok(Atom::Hessian216);
        }
        let keyed: [(&str, AtomCtor); 7] = [
            ("Fermat", Atom::Fermat),
            ("Xd", Atom::Xd),
            ("C", Atom::Cyclic),
            ("D", Atom::Dihedral),
            ("Q", Atom::Quaternion),
            ("S", Atom::Symmetric),
            ("A", Atom::Alternating),
        ];
        for (key, make) in keyed {
            if self.eat(key) {
                return Ok(make(self.int()?));
            }
        }
        self.fail(&["C", "D", "Q", "S", "A", "PSL", "Hess216", "Fermat", "Xd", "CycMat", "\"(\""])
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupExpr, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.fail(&["\"x\"", "end of input"]);
    }
    Ok(e)
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Atom::Cyclic(n) => write!(f, "C{n}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::Quaternion(n) => write!(f, "Q{n}"),
            Atom::Symmetric(n) => write!(f, "S{n}"),
            Atom::Alternating(n) => write!(f, "A{n}"),
            Atom::Psl2(q) => write!(f, "PSL(2,{q})"),
            Atom::Hessian216 => write!(f, "Hess216"),
            Atom::Fermat(d) => write!(f, "Fermat {d}"),
            Atom::Xd(d) => write!(f, "Xd {d}"),
            Atom::CycMat(s, t) => write!(f, "CycMat({s},{t})"),
        }
    }
}

/// Writes `e`, parenthesized unless it is an atom or a power.
fn write_primary(f: &mut fmt::Formatter<'_>, e: &GroupExpr) -> fmt::Result {
    match e {
        GroupExpr::Atom(_) | GroupExpr::Power(..) => write!(f, "{e}"),
        _ => write!(f, "({e})"),
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Atom(a) => write!(f, "{a}"),
            GroupExpr::Power(a, k) => write!(f, "{a}^{k}"),
            GroupExpr::Product(l, r) => {
                write!(f, "{l} x ")?;
                match **r {
                    GroupExpr::Product(..) => write!(f, "({r})"),
                    _ => write!(f, "{r}"),
                }
            }
            GroupExpr::Semidirect { left, right, action } => {
                write_primary(f, left)?;
                write!(f, ":")?;
                write_primary(f, right)?;
                write!(f, "@{action}")
            }
        }
    }
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::OutOfRange(what.into()))
    }
}

impl Atom {
    pub fn build(&self) -> Result<FiniteGroup, Error> {
        match *self {
            Atom::Cyclic(n) => build_cyclic(n),
            Atom::Dihedral(n) => {
                ensure(n >= 6 && n % 2 == 0, format!("D{n}: dihedral order must be even and at least 6"))?;
                build_dihedral(n / 2)
            }
            Atom::Quaternion(n) => {
                ensure(n.is_power_of_two() && n >= 8, format!("Q{n}: quaternion order must be 2^s with s ≥ 3"))?;
                build_quaternion(n.trailing_zeros())
            }
            Atom::Symmetric(n) => build_symmetric(n),
            Atom::Alternating(n) => build_alternating(n),
            Atom::Psl2(q) => build_psl2(q),
            Atom::Hessian216 => build_hessian216(),
            Atom::Fermat(d) => build_fermat_aut(d),
            Atom::Xd(d) => xd_group(d).map(|(g, _)| g),
            Atom::CycMat(s, t) => cyc_mat(s, t).map(|m| m.group().clone()),
        }
    }
}

impl GroupExpr {
    fn build_raw(&self) -> Result<FiniteGroup, Error> {
        match self {
            GroupExpr::Atom(a) => a.build(),
            GroupExpr::Power(a, k) => {
                ensure(*k >= 1, "exponent must be at least 1")?;
                let base = a.build()?;
                let mut g = base.clone();
                for _ in 1..*k {
                    g = direct_product(&g, &base)?;
                }
                Ok(g)
            }
            GroupExpr::Product(l, r) => direct_product(&l.build_raw()?, &r.build_raw()?),
            GroupExpr::Semidirect { left, right, action } => {
                let n = left.build_raw()?;
                let k = right.build_raw()?;
                semidirect(&n, &k, &ActionSpec::named(action, &n, &k)?)
            }
        }
    }

    /// Builds the group, labeled by the printed expression.
    pub fn build(&self) -> Result<FiniteGroup, Error> {
        Ok(self.build_raw()?.with_label(self.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_powers() {
        let e = parse_group_spec("C4 x C2").unwrap();
        assert!(matches!(e, GroupExpr::Product(..)));
        assert_eq!(e.build().unwrap().order(), 8);
        let p = parse_group_spec("C3^2").unwrap();
        assert_eq!(p, GroupExpr::Power(Atom::Cyclic(3), 2));
        assert_eq!(p.build().unwrap().order(), 9);
    }

    #[test]
    fn semidirect_node() {
        let e = parse_group_spec("C3^2:Q8@sl23_q8").unwrap();
        assert!(matches!(e, GroupExpr::Semidirect { .. }));
        assert_eq!(e.build().unwrap().order(), 72);
        assert_eq!(parse_group_spec("C3^2 : C4 @ gl23_rot").unwrap().build().unwrap().order(), 36);
    }

    #[test]
    fn errors_carry_offsets() {
        let err = parse_group_spec("D(7").unwrap_err();
        assert_eq!(err.offset, 1);
        assert_eq!(err.expected, vec!["integer".to_string()]);
        assert_eq!(parse_group_spec("C4 x").unwrap_err().offset, 4);
        assert_eq!(parse_group_spec("C4 C2").unwrap_err().offset, 3);
        assert_eq!(parse_group_spec("C3^2:C4@spin").unwrap_err().offset, 8);
        assert_eq!(parse_group_spec("(C2 x C2").unwrap_err().offset, 8);
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(parse_group_spec("Fermat5").unwrap(), parse_group_spec(" Fermat  5 ").unwrap());
        assert_eq!(parse_group_spec("C4xC2").unwrap(), parse_group_spec("C4 x C2").unwrap());
    }

    #[test]
    fn print_round_trip() {
        for text in [
            "C1",
            "(C2 x C2) x C2",
            "C2 x (C2 x C2)",
            "C3^2:Q8@sl23_q8",
            "(C3 x C3):C4@gl23_rot x S3",
            "PSL(2,7) x CycMat(4,1)",
            "Xd 6 x Fermat 3",
        ] {
            let e = parse_group_spec(text).unwrap();
            let printed = e.to_string();
            assert_eq!(parse_group_spec(&printed).unwrap(), e, "{text} -> {printed}");
        }
    }

    #[test]
    fn atom_ranges() {
        assert!(parse_group_spec("D7").unwrap().build().is_err());
        assert!(parse_group_spec("Q12").unwrap().build().is_err());
        assert_eq!(parse_group_spec("D8").unwrap().build().unwrap().order(), 8);
        assert_eq!(parse_group_spec("Q16").unwrap().build().unwrap().order(), 16);
    }
}
