use std::sync::Arc;

use num::rational::BigRational;

use crate::cyclotomic::{CyclotomicField, CyclotomicNumber};
use crate::error::{HkrError, Result};
use crate::group::FiniteGroup;
use crate::ring::Ring;

/// A function on a set of conjugacy classes of `G` with cyclotomic values.
///
/// `domain` lists indices into `group.conjugacy_classes()`; it is either all
/// classes or the classes of `p`-power-order elements.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    field: CyclotomicField,
    domain: Arc<Vec<usize>>,
    values: Vec<CyclotomicNumber>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
            && self.domain == other.domain
            && self.field == other.field
            && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(
        group: Arc<FiniteGroup>,
        field: CyclotomicField,
        domain: Arc<Vec<usize>>,
        values: Vec<CyclotomicNumber>,
    ) -> Result<Self> {
        if values.len() != domain.len() {
            return Err(HkrError::InvalidArgument(format!(
                "{} values for {} classes",
                values.len(),
                domain.len()
            )));
        }
        if values.iter().any(|v| v.conductor() != field.conductor()) {
            return Err(HkrError::RingMismatch(
                "value outside the coefficient field".into(),
            ));
        }
        Ok(Self {
            group,
            field,
            domain,
            values,
        })
    }

    /// The function on all classes taking the value `f(class index)`.
    pub fn from_fn(
        group: Arc<FiniteGroup>,
        field: CyclotomicField,
        f: impl Fn(usize) -> CyclotomicNumber,
    ) -> Self {
        let domain: Vec<usize> = (0..group.conjugacy_classes().len()).collect();
        let values = domain.iter().map(|&c| f(c)).collect();
        Self {
            group,
            field,
            domain: Arc::new(domain),
            values,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn values(&self) -> &[CyclotomicNumber] {
        &self.values
    }

    /// Defined on every conjugacy class.
    pub fn is_total(&self) -> bool {
        self.domain.len() == self.group.conjugacy_classes().len()
    }

    /// Value on the class with index `class` in the group's class list.
    pub fn at_class(&self, class: usize) -> Option<&CyclotomicNumber> {
        self.domain
            .iter()
            .position(|&c| c == class)
            .map(|i| &self.values[i])
    }

    pub fn value_at(&self, g: crate::group::Elem) -> Option<&CyclotomicNumber> {
        let lookup = self.group.class_lookup();
        self.at_class(lookup[g as usize])
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.group, &other.group) || self.domain != other.domain {
            return Err(HkrError::InvalidArgument(
                "class functions on different domains".into(),
            ));
        }
        if self.field != other.field {
            return Err(HkrError::RingMismatch(format!(
                "Q(zeta_{}) vs Q(zeta_{})",
                self.field.conductor(),
                other.field.conductor()
            )));
        }
        Ok(())
    }

    fn zip(
        &self,
        other: &Self,
        op: impl Fn(&CyclotomicNumber, &CyclotomicNumber) -> CyclotomicNumber,
    ) -> Result<Self> {
        self.compatible(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| op(a, b))
            .collect();
        Ok(Self {
            values,
            ..self.clone()
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| self.field.sub(a, b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| self.field.mul(a, b))
    }

    pub fn map_values(&self, f: impl Fn(&CyclotomicNumber) -> CyclotomicNumber) -> Self {
        Self {
            values: self.values.iter().map(f).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map_values(|a| self.field.scale(a, c))
    }

    /// Values moved into `Q(zeta_m)` for a multiple `m` of the conductor.
    pub fn embed(&self, target: &CyclotomicField) -> Self {
        Self {
            field: target.clone(),
            values: self.values.iter().map(|a| self.field.embed(a, target)).collect(),
            ..self.clone()
        }
    }

    /// Values moved into a subfield, when they lie there.
    pub fn restrict_field(&self, target: &CyclotomicField) -> Option<Self> {
        let values = self
            .values
            .iter()
            .map(|a| self.field.restrict(a, target))
            .collect::<Option<Vec<_>>>()?;
        Some(Self {
            field: target.clone(),
            values,
            ..self.clone()
        })
    }

    /// Restriction to a subset of the domain, given as class indices.
    pub fn restrict_domain(&self, classes: Arc<Vec<usize>>) -> Result<Self> {
        let values = classes
            .iter()
            .map(|&c| {
                self.at_class(c)
                    .cloned()
                    .ok_or_else(|| HkrError::InvalidArgument(format!("class {c} outside the domain")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            domain: classes,
            values,
            ..self.clone()
        })
    }

    /// `<self, other> = (1/|G|) Σ_k |C_k| self(g_k) conj(other(g_k))`; total functions only.
    pub fn inner_product(&self, other: &Self) -> Result<CyclotomicNumber> {
        self.compatible(other)?;
        if !self.is_total() {
            return Err(HkrError::InvalidArgument(
                "inner product needs total class functions".into(),
            ));
        }
        let f = &self.field;
        let classes = self.group.conjugacy_classes();
        let mut acc = f.zero();
        for (i, &c) in self.domain.iter().enumerate() {
            let term = f.mul(&self.values[i], &f.conj(&other.values[i]));
            let size = BigRational::from_integer(classes[c].size().into());
            acc = f.add(&acc, &f.scale(&term, &size));
        }
        let order = BigRational::from_integer(self.group.order().into());
        Ok(f.scale(&acc, &order.recip()))
    }

    /// Formatted values, one per class in the domain.
    pub fn format_values(&self) -> Vec<String> {
        self.values
            .iter()
            .map(|v| self.field.format_with(v, "z"))
            .collect()
    }
}
