use super::{Elem, FiniteRing, LocalKind, LocalRing};
use crate::error::{Error, Result};

/// Reduction `φ: R → R/M` for a local ring, with a coefficient-wise lift.
#[derive(Debug, Clone)]
pub struct ResidueMap {
    ring: LocalRing,
    field: FiniteRing,
}

impl ResidueMap {
    pub fn field(&self) -> &FiniteRing {
        &self.field
    }

    pub fn project(&self, a: Elem) -> Elem {
        let l = self.ring.residue_char();
        let coeffs: Vec<u64> = self.ring.coeffs(a.0 as u64).iter().map(|c| c % l).collect();
        Elem(self.field.factors()[0].encode(&coeffs) as u32)
    }

    pub fn lift(&self, b: Elem) -> Elem {
        let coeffs = self.field.factors()[0].coeffs(b.0 as u64);
        Elem(self.ring.encode(&coeffs) as u32)
    }
}

impl FiniteRing {
    pub fn residue_projection(&self) -> Result<ResidueMap> {
        if !self.is_local() {
            return Err(Error::NotLocal(self.spec_string()));
        }
        let ring = self.factors()[0].clone();
        let field = LocalRing::from_parts(
            LocalKind::Field,
            ring.residue_char(),
            1,
            ring.defining_poly().to_vec(),
        );
        Ok(ResidueMap { ring, field: FiniteRing::local(field) })
    }
}

#[cfg(test)]
mod tests {
    use crate::ring::{parse_ring_spec, Elem};

    #[test]
    fn reductions() {
        let r = parse_ring_spec("Z/25").unwrap();
        let phi = r.residue_projection().unwrap();
        assert_eq!(phi.field().size(), 5);
        assert_eq!(phi.project(Elem(7)), Elem(2));
        let r = parse_ring_spec("Z/27").unwrap();
        assert_eq!(r.residue_projection().unwrap().project(Elem(10)), Elem(1));
    }

    #[test]
    fn projection_is_a_surjective_homomorphism_with_kernel_m() {
        for spec in ["Z/27", "GR(9,2)", "GR(8,3)", "F(2,4)", "Z/49"] {
            let r = parse_ring_spec(spec).unwrap();
            let phi = r.residue_projection().unwrap();
            let k = phi.field();
            let m = r.maximal_ideal().unwrap();
            for a in r.elements() {
                assert_eq!(phi.project(a) == k.zero(), m.contains(a));
                for b in r.elements().step_by(7) {
                    assert_eq!(phi.project(r.mul(a, b)), k.mul(phi.project(a), phi.project(b)));
                    assert_eq!(phi.project(r.add(a, b)), k.add(phi.project(a), phi.project(b)));
                }
            }
            for b in k.elements() {
                assert_eq!(phi.project(phi.lift(b)), b);
            }
        }
    }

    #[test]
    fn pth_powers_biject_onto_residue_units_when_p2r_vanishes() {
        for (spec, p) in [("GR(9,2)", 3u64), ("Z/25", 5), ("Z/49", 7), ("GR(4,3)", 2)] {
            let r = parse_ring_spec(spec).unwrap();
            let phi = r.residue_projection().unwrap();
            let s = r.units_pth_powers(p).unwrap();
            let mut images: Vec<Elem> = s.members().iter().map(|&x| phi.project(x)).collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), s.len());
            assert_eq!(images.len() as u64, phi.field().size() - 1);
        }
    }
}
