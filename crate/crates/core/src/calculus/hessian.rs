use super::field::expect_len;
use super::suite::{lifted_suite, LiftedSuite};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{zero, Rational};
use crate::tangent::Flavor;

/// Second differences `d²φ(a) = dφ(π₊a) − dφ(πa)` on the vertices of `t²G`
/// or `tτG`, fibred over base vertices by `π²(a) = i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondSection {
    pub flavor: Flavor,
    pub values: Vec<Rational>,
    /// `fiber_index[i] = {a : π²(a) = i}`, ascending.
    pub fiber_index: Vec<Vec<usize>>,
}

/// `d²φ` given the lifted suite of the inner tangent graph.
pub fn hessian_with(base: &Graph, lifted: &LiftedSuite, phi: &[Rational]) -> Result<SecondSection> {
    let flavor = match lifted.tangent.flavor() {
        Flavor::T => Flavor::T2,
        Flavor::Tau => Flavor::TTau,
        other => return Err(Error::WrongFlavor { expected: Flavor::Tau, found: other }),
    };
    let inner = lifted.tangent.table();
    expect_len(phi, base.n())?;
    let dphi: Vec<Rational> = (0..inner.len()).map(|u| &phi[inner.pi_plus(u)] - &phi[inner.pi(u)]).collect();
    let values = lifted.suite.d.apply(&dphi)?;
    let outer = &lifted.suite.table;
    let mut fiber_index = vec![Vec::new(); base.n()];
    for a in 0..outer.len() {
        fiber_index[inner.pi(outer.pi(a))].push(a);
    }
    Ok(SecondSection { flavor, values, fiber_index })
}

/// `Hess φ` (flavor `t2`) or `Hess_τG φ` (flavor `t_tau`).
pub fn hessian(g: &Graph, phi: &[Rational], flavor: Flavor) -> Result<SecondSection> {
    let inner = match flavor {
        Flavor::T2 => Flavor::T,
        Flavor::TTau => Flavor::Tau,
        other => return Err(Error::WrongFlavor { expected: Flavor::TTau, found: other }),
    };
    hessian_with(g, &lifted_suite(g, inner)?, phi)
}

/// `|Hess φ|²(i) = Σ_{π²(a)=i} |d²φ(a)|²`.
pub fn hessian_norm(h: &SecondSection) -> Vec<Rational> {
    h.fiber_index.iter().map(|fiber| fiber.iter().fold(zero(), |acc, &a| acc + &h.values[a] * &h.values[a])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, random_graph};
    use crate::rational::{int, parse, random_ints, vec_from_ints};
    use crate::tangent::{iterate_tangent, orientation_classify, Orientation, TangentGraph};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_edge_tau() {
        let h = hessian(&complete(2), &vec_from_ints(&[0, 1]), Flavor::TTau).unwrap();
        assert_eq!(h.values, vec_from_ints(&[-2, 2]));
        assert_eq!(hessian_norm(&h), vec_from_ints(&[4, 4]));
    }

    #[test]
    fn constant_is_zero() {
        let g = random_graph(7, &parse("1/2").unwrap(), 1).unwrap();
        let h = hessian(&g, &vec![int(3); 7], Flavor::TTau).unwrap();
        assert!(h.values.iter().all(|v| *v == zero()));
        assert!(hessian_norm(&h).iter().all(|v| *v == zero()));
    }

    #[test]
    fn linear_on_path() {
        let p3 = path(3);
        let h = hessian(&p3, &vec_from_ints(&[0, 1, 2]), Flavor::T2).unwrap();
        let t2 = iterate_tangent(&TangentGraph::t(&p3)).unwrap();
        for (a, v) in orientation_classify(&t2).unwrap().iter().enumerate() {
            let expected = match v.orientation.unwrap() {
                Orientation::Forward | Orientation::Backward => int(0),
                // dφ(ji) − dφ(ij) = −2 dφ(ij).
                Orientation::Reflection => {
                    if v.i < v.j {
                        int(-2)
                    } else {
                        int(2)
                    }
                }
            };
            assert_eq!(h.values[a], expected, "{}", t2.vertex_name(a));
        }
    }

    #[test]
    fn t2_values_embed_in_ttau() {
        let g = random_graph(8, &parse("1/2").unwrap(), 3).unwrap();
        let phi = random_ints(&mut ChaCha8Rng::seed_from_u64(3), g.n());
        let h2 = hessian(&g, &phi, Flavor::T2).unwrap();
        let ht = hessian(&g, &phi, Flavor::TTau).unwrap();
        let t = TangentGraph::t(&g);
        let outer_t = crate::tangent::DirectedEdgeTable::new(t.graph());
        let outer_tau = crate::tangent::DirectedEdgeTable::new(TangentGraph::tau(&g).graph());
        for a in 0..outer_t.len() {
            let (u, v) = outer_t.edge(a);
            let b = outer_tau.index_of(u, v).expect("tG edge is a tauG edge");
            assert_eq!(h2.values[a], ht.values[b]);
        }
        let total: usize = ht.fiber_index.iter().map(Vec::len).sum();
        assert_eq!(total, ht.values.len());
    }

    #[test]
    fn scaling() {
        let g = random_graph(7, &parse("1/2").unwrap(), 9).unwrap();
        let phi = random_ints(&mut ChaCha8Rng::seed_from_u64(9), g.n());
        let c = parse("-3/2").unwrap();
        let scaled: Vec<Rational> = phi.iter().map(|v| v * &c).collect();
        let a = hessian_norm(&hessian(&g, &phi, Flavor::TTau).unwrap());
        let b = hessian_norm(&hessian(&g, &scaled, Flavor::TTau).unwrap());
        assert!(a.iter().zip(&b).all(|(x, y)| x * &c * &c == *y));
    }
}
