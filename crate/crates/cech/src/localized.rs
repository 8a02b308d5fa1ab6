//! Elements f/s^k of A[s^{-1}] with bounded denominator exponent.

use std::fmt;

use algebra_core::{syzygy::ModuleGb, Poly, RingRef};

use crate::error::CechError;

/// f/s^k, kept with the least exponent reachable within the saturation cap.
#[derive(Clone)]
pub struct LocalizedElement {
    ring: RingRef,
    base: Poly,
    num: Poly,
    exp: u32,
    cap: u32,
}

impl fmt::Debug for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})^{}", self.ring.render(&self.num), self.ring.render(&self.base), self.exp)
    }
}

impl LocalizedElement {
    /// `num / base^exp`; equality tests multiply by base^m for m ≤ `cap`.
    pub fn new(ring: &RingRef, base: &Poly, num: &Poly, exp: u32, cap: u32) -> Self {
        let mut e = Self {
            ring: ring.clone(),
            base: ring.nf(base),
            num: ring.nf(num),
            exp,
            cap,
        };
        e.normalize();
        e
    }

    pub fn from_ring(ring: &RingRef, base: &Poly, a: &Poly, cap: u32) -> Self {
        Self::new(ring, base, a, 0, cap)
    }

    pub fn base(&self) -> &Poly {
        &self.base
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn saturation_cap(&self) -> u32 {
        self.cap
    }

    fn pow(&self, e: u32) -> Poly {
        self.ring.pow(&self.base, e)
    }

    /// Some m ≤ cap with s^m·f = 0.
    fn killed(&self, f: &Poly) -> bool {
        (0..=self.cap).any(|m| self.ring.mul(&self.pow(m), f).is_zero())
    }

    /// Lowers the exponent while f/s^k = g/s^{k-1} for some g, i.e. while
    /// s^{m+k-1}·f ∈ (s^{m+k}) for some m ≤ cap.
    fn normalize(&mut self) {
        if self.killed(&self.num) {
            self.num = Poly::zero();
            self.exp = 0;
            return;
        }
        while self.exp > 0 {
            let e = self.exp;
            let found = (0..=self.cap).find_map(|m| {
                let gb = ModuleGb::new(&self.ring, 1, &[vec![self.pow(m + e)]], true);
                let v = self.ring.mul(&self.pow(m + e - 1), &self.num);
                gb.lift(&self.ring, &[v]).map(|h| h[0].clone())
            });
            match found {
                Some(g) => {
                    self.num = self.ring.nf(&g);
                    self.exp = e - 1;
                }
                None => break,
            }
        }
    }

    fn same_base(&self, o: &Self) -> Result<(), CechError> {
        if self.ring.nf(&self.ring.sub(&self.base, &o.base)).is_zero() {
            Ok(())
        } else {
            Err(CechError::MismatchedBases)
        }
    }

    /// f/s^k = g/s^l iff s^m(f·s^l − g·s^k) = 0 for some m ≤ cap.
    pub fn equals(&self, o: &Self) -> Result<bool, CechError> {
        self.same_base(o)?;
        let d = self.ring.sub(&self.ring.mul(&self.num, &self.pow(o.exp)), &self.ring.mul(&o.num, &self.pow(self.exp)));
        Ok(self.killed(&d))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Result<Self, CechError> {
        self.same_base(o)?;
        let num = self.ring.add(&self.ring.mul(&self.num, &self.pow(o.exp)), &self.ring.mul(&o.num, &self.pow(self.exp)));
        Ok(Self::new(&self.ring, &self.base, &num, self.exp + o.exp, self.cap.max(o.cap)))
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.ring, &self.base, &self.ring.neg(&self.num), self.exp, self.cap)
    }

    pub fn mul(&self, o: &Self) -> Result<Self, CechError> {
        self.same_base(o)?;
        Ok(Self::new(&self.ring, &self.base, &self.ring.mul(&self.num, &o.num), self.exp + o.exp, self.cap.max(o.cap)))
    }

    /// The image in A[(s·t)^{-1}]: f/s^k = f·t^k/(st)^k.
    pub fn restrict(&self, t: &Poly) -> Self {
        let base = self.ring.mul(&self.base, t);
        let num = self.ring.mul(&self.num, &self.ring.pow(t, self.exp));
        Self::new(&self.ring, &base, &num, self.exp, self.cap)
    }
}
