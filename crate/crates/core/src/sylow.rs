//! Sylow 2-subgroups and generator counts of 2-groups.

use crate::error::{Error, Result};
use crate::group::{two_part, FiniteGroup, Subgroup};

/// A Sylow 2-subgroup of `g` containing `seed`.
///
/// Starts from `⟨seed⟩` and repeatedly adjoins the least element of the
/// normalizer that lies outside and has 2-power order.
pub fn sylow2_containing(g: &FiniteGroup, seed: usize) -> Result<Subgroup> {
    if seed >= g.order() {
        return Err(Error::OutOfRange(format!("element {seed}")));
    }
    if !g.element_order(seed).is_power_of_two() {
        return Err(Error::NotTwoPowerOrder(seed));
    }
    let target = two_part(g.order());
    let mut p = g.subgroup_closure(&[seed]);
    while p.order() < target {
        let normalizer = g.normalizer(&p);
        let grown = normalizer
            .members()
            .iter()
            .filter(|&&x| !p.contains(x) && g.element_order(x).is_power_of_two())
            .map(|&x| {
                let mut seed: Vec<usize> = p.members().to_vec();
                seed.push(x);
                g.subgroup_closure(&seed)
            })
            .find(|q| q.order().is_power_of_two())
            .expect("a 2-subgroup below the Sylow order has a proper 2-overgroup in its normalizer");
        p = grown;
    }
    Ok(p)
}

/// Minimal number of generators of a 2-group: log₂ of the index of the
/// Frattini subgroup, generated by all squares and commutators.
pub fn frattini_rank_2group(p: &FiniteGroup) -> Result<u32> {
    if !p.order().is_power_of_two() {
        return Err(Error::NotTwoGroup(p.order()));
    }
    let mut seed: Vec<usize> = p.elements().map(|x| p.mul(x, x)).collect();
    for a in p.elements() {
        for b in p.elements() {
            seed.push(p.commutator(a, b));
        }
    }
    let phi = p.subgroup_closure(&seed);
    Ok((p.order() / phi.order()).trailing_zeros())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::close_generators;
    use crate::perm::Perm;

    #[test]
    fn odd_order_group_has_trivial_sylow() {
        let c3 = close_generators(&[Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap();
        assert!(sylow2_containing(&c3, 0).unwrap().is_trivial());
        assert_eq!(sylow2_containing(&c3, 1).unwrap_err(), Error::NotTwoPowerOrder(1));
    }

    #[test]
    fn sylow_of_s4_has_order_eight() {
        let s4 = close_generators(&[
            Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ])
        .unwrap();
        let t = s4.find_perm(&Perm::from_cycles(4, &[&[0, 1]]).unwrap()).unwrap();
        let p = sylow2_containing(&s4, t).unwrap();
        assert_eq!(p.order(), 8);
        assert!(p.contains(t));
    }

    #[test]
    fn rank_of_cyclic_and_trivial() {
        let c8: Vec<usize> = (0..8).collect();
        let c8 = close_generators(&[Perm::from_cycles(8, &[&c8]).unwrap()]).unwrap();
        assert_eq!(frattini_rank_2group(&c8).unwrap(), 1);
        assert_eq!(frattini_rank_2group(&FiniteGroup::trivial()).unwrap(), 0);
        let c3 = close_generators(&[Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap();
        assert_eq!(frattini_rank_2group(&c3).unwrap_err(), Error::NotTwoGroup(3));
    }
}
