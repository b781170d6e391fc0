use std::collections::BTreeSet;

use super::{Elem, FiniteRing};
use crate::error::{Error, Result};

/// An ideal, stored as its sorted element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    description: String,
    members: Vec<Elem>,
}

impl Ideal {
    pub(crate) fn new(description: impl Into<String>, members: impl IntoIterator<Item = Elem>) -> Self {
        let set: BTreeSet<Elem> = members.into_iter().collect();
        Ideal { description: description.into(), members: set.into_iter().collect() }
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.members == [Elem(0)]
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.members.iter().map(|e| e.0).collect()
    }
}

impl FiniteRing {
    /// The principal ideal `gR`.
    pub fn ideal_generated(&self, g: Elem) -> Ideal {
        Ideal::new(
            format!("({})", self.label(g)),
            self.elements().map(|r| self.mul(r, g)),
        )
    }

    /// `cR`, e.g. `pR` or `p²R`.
    pub fn scalar_ideal(&self, c: i64) -> Ideal {
        let g = self.from_int(c);
        Ideal::new(format!("{c}R"), self.elements().map(|r| self.mul(r, g)))
    }

    /// The non-units of a local ring.
    pub fn maximal_ideal(&self) -> Result<Ideal> {
        if !self.is_local() {
            return Err(Error::NotLocal(self.spec_string()));
        }
        Ok(Ideal::new("M", self.elements().filter(|&a| !self.is_unit(a))))
    }

    /// Product of the maximal ideals of the local factors.
    pub fn jacobson_radical(&self) -> Ideal {
        Ideal::new(
            "J(R)",
            self.elements().filter(|&a| {
                self.factors().iter().zip(self.split(a)).all(|(f, x)| !f.is_unit(x))
            }),
        )
    }

    /// The product ideal `I_1 × .. × I_d` from per-factor ideals given as
    /// local index lists.
    pub fn product_ideal(&self, description: impl Into<String>, parts: &[Vec<u64>]) -> Ideal {
        let mut members = vec![Vec::new()];
        for part in parts {
            let mut next = Vec::with_capacity(members.len() * part.len());
            for prefix in &members {
                for &x in part {
                    let mut v: Vec<u64> = prefix.clone();
                    v.push(x);
                    next.push(v);
                }
            }
            members = next;
        }
        Ideal::new(description, members.iter().map(|c| self.join(c)))
    }
}

#[cfg(test)]
mod tests {
    use crate::ring::{parse_ring_spec, Elem};

    fn elems(v: &[u32]) -> Vec<Elem> {
        v.iter().map(|&x| Elem(x)).collect()
    }

    #[test]
    fn maximal_ideals() {
        let r = parse_ring_spec("Z/25").unwrap();
        assert_eq!(r.maximal_ideal().unwrap().members(), elems(&[0, 5, 10, 15, 20]));
        let f = parse_ring_spec("F(2,4)").unwrap();
        assert!(f.maximal_ideal().unwrap().is_zero());
        let gr = parse_ring_spec("GR(9,2)").unwrap();
        let m = gr.maximal_ideal().unwrap();
        assert_eq!(m.len(), 9);
        assert_eq!(m.members(), gr.scalar_ideal(3).members());
        assert!(parse_ring_spec("Z/12").unwrap().maximal_ideal().is_err());
    }

    #[test]
    fn scalar_ideals() {
        let r = parse_ring_spec("Z/27").unwrap();
        assert_eq!(r.scalar_ideal(9).members(), elems(&[0, 9, 18]));
        assert!(parse_ring_spec("Z/25").unwrap().scalar_ideal(25).is_zero());
        let r = parse_ring_spec("Z/125").unwrap();
        assert_eq!(r.scalar_ideal(25).members(), elems(&[0, 25, 50, 75, 100]));
        assert_eq!(r.ideal_generated(Elem(50)).members(), r.scalar_ideal(25).members());
    }

    #[test]
    fn jacobson_radicals() {
        assert!(parse_ring_spec("F(13,1)").unwrap().jacobson_radical().is_zero());
        let r = parse_ring_spec("Z/12").unwrap();
        let j = r.jacobson_radical();
        assert_eq!(j.members(), &[Elem(0), r.join(&[2, 0])]);
        assert_eq!(parse_ring_spec("Z/9 x Z/9").unwrap().jacobson_radical().len(), 9);
    }

    #[test]
    fn ideals_are_closed() {
        let r = parse_ring_spec("Z/8 x GR(4,2)").unwrap();
        for g in [r.from_int(2), r.join(&[4, 2]), r.one()] {
            let i = r.ideal_generated(g);
            assert!(i.contains(r.zero()));
            for &a in i.members() {
                for &b in i.members() {
                    assert!(i.contains(r.add(a, b)));
                }
                for x in r.elements() {
                    assert!(i.contains(r.mul(x, a)));
                }
            }
        }
    }
}
