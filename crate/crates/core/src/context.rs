use crate::error::{Error, Result};
use crate::group::{build_group_table, g6, ElementId, GroupTable};
use crate::hurwitz::{ClassSignature, Factorization, Refl, ReflectionSystem};
use crate::matrix::Mat2;

/// G6 with its reflection system and the letters of standard factorizations:
/// `A`, `A^-1`, `B`, and the Coxeter element `C = A B`.
#[derive(Clone, Debug)]
pub struct G6 {
    sys: ReflectionSystem,
    a: Refl,
    a_inv: Refl,
    b: Refl,
    coxeter: ElementId,
}

impl G6 {
    pub fn build() -> Result<G6> {
        G6::from_table(build_group_table(&g6::generators())?)
    }

    /// Wraps a table built from the generator list `[A, B]`.
    pub fn from_table(table: GroupTable) -> Result<G6> {
        let &[ga, gb] = table.generator_ids() else {
            return Err(Error::Precondition("expected the two generators A and B".into()));
        };
        let coxeter = table.mul(ga, gb);
        let sys = ReflectionSystem::new(table)?;
        let not_refl = |name: &str| Error::Precondition(format!("generator {name} is not a reflection"));
        let a = sys.refl_of(ga).ok_or_else(|| not_refl("A"))?;
        let b = sys.refl_of(gb).ok_or_else(|| not_refl("B"))?;
        Ok(G6 {
            a_inv: sys.inverse(a),
            sys,
            a,
            b,
            coxeter,
        })
    }

    pub fn system(&self) -> &ReflectionSystem {
        &self.sys
    }

    pub fn table(&self) -> &GroupTable {
        self.sys.table()
    }

    pub fn a(&self) -> Refl {
        self.a
    }

    pub fn a_inv(&self) -> Refl {
        self.a_inv
    }

    pub fn b(&self) -> Refl {
        self.b
    }

    pub fn generator_matrices(&self) -> Vec<Mat2> {
        let t = self.table();
        t.generator_ids().iter().map(|&x| t.element(x).clone()).collect()
    }

    /// The Coxeter element `A B`.
    pub fn coxeter(&self) -> ElementId {
        self.coxeter
    }

    /// `(A, ..., A, A^-1, ..., A^-1, B, ..., B)` with `n`, `m`, `k` copies.
    pub fn standard_factorization(&self, sig: ClassSignature) -> Result<Factorization> {
        let refls = self.standard_refls(sig);
        if self.sys.product(&refls) != self.coxeter {
            return Err(Error::InadmissibleSignature { sig });
        }
        Ok(Factorization {
            target: self.coxeter,
            refls,
        })
    }

    pub(crate) fn standard_refls(&self, sig: ClassSignature) -> Vec<Refl> {
        let mut refls = Vec::with_capacity(sig.len());
        refls.extend(std::iter::repeat_n(self.a, sig.n as usize));
        refls.extend(std::iter::repeat_n(self.a_inv, sig.m as usize));
        refls.extend(std::iter::repeat_n(self.b, sig.k as usize));
        refls
    }
}
