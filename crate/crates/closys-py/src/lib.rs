//! Python bindings for the closure-system library.
//!
//! Exposes a `ClosureSystem` class plus an `OptimalSearch` result
//! object. Sets cross the boundary as lists of element-name strings in
//! universe order, implications as `(lhs, rhs)` tuples of such lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use closys::document::DocumentBody;
use closys::optimal::{enumerate_optimal_bases, SearchLimits};
use closys::quasi::QuasiReport;
use closys::report::serialize_verdict;
use closys::{
    canonical_basis, check_basis, group_by_essential, left_sides_are_minimal_generators,
    left_sides_saturate_to_critical, mix_bases, AttrSet, Implication, ImplicationSet, MixSpec,
    SetFamily, SystemDocument, Universe,
};

type NamedSet = Vec<String>;
type NamedImplication = (Vec<String>, Vec<String>);

fn value_err(err: closys::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn to_names(universe: &Universe, set: AttrSet) -> NamedSet {
    set.iter().map(|i| universe.name(i).to_string()).collect()
}

fn to_set(universe: &Universe, names: &[String]) -> PyResult<AttrSet> {
    universe.set_of(names).map_err(value_err)
}

fn to_implications(universe: &Universe, imps: &[NamedImplication]) -> PyResult<ImplicationSet> {
    let mut out = Vec::with_capacity(imps.len());
    for (lhs, rhs) in imps {
        out.push(Implication::new(
            to_set(universe, lhs)?,
            to_set(universe, rhs)?,
        ));
    }
    Ok(ImplicationSet::from_implications(out))
}

fn from_implications(universe: &Universe, sigma: &ImplicationSet) -> Vec<NamedImplication> {
    sigma
        .iter()
        .map(|imp| (to_names(universe, imp.lhs), to_names(universe, imp.rhs)))
        .collect()
}

fn family_to_lists(universe: &Universe, fam: &SetFamily) -> Vec<NamedSet> {
    fam.iter().map(|s| to_names(universe, s)).collect()
}

/// A finite closure system: a universe of named elements plus an
/// intersection-closed family of closed sets.
#[pyclass]
struct ClosureSystem {
    inner: closys::ClosureSystem,
}

#[pymethods]
impl ClosureSystem {
    /// Build the system whose closed sets are the models of the given
    /// implications.
    #[staticmethod]
    fn from_implications(
        elements: Vec<String>,
        implications: Vec<NamedImplication>,
    ) -> PyResult<Self> {
        let universe = Universe::new(&elements).map_err(value_err)?;
        let sigma = to_implications(&universe, &implications)?;
        let inner =
            closys::ClosureSystem::from_implications(universe, &sigma).map_err(value_err)?;
        Ok(ClosureSystem { inner })
    }

    /// Build a system from an explicit family of closed sets, which
    /// must be intersection-closed and contain the full universe.
    #[staticmethod]
    fn from_family(elements: Vec<String>, family: Vec<NamedSet>) -> PyResult<Self> {
        let universe = Universe::new(&elements).map_err(value_err)?;
        let mut sets = Vec::with_capacity(family.len());
        for names in &family {
            sets.push(to_set(&universe, names)?);
        }
        let inner =
            closys::ClosureSystem::new(universe, SetFamily::from_sets(sets)).map_err(value_err)?;
        Ok(ClosureSystem { inner })
    }

    /// Parse a system document (implication or family form).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let doc = SystemDocument::parse(text).map_err(value_err)?;
        let inner = doc.to_system().map_err(value_err)?;
        Ok(ClosureSystem { inner })
    }

    /// Element names in universe order.
    fn elements(&self) -> Vec<String> {
        self.inner.universe().names().to_vec()
    }

    fn closed_sets(&self) -> Vec<NamedSet> {
        family_to_lists(self.inner.universe(), self.inner.closed())
    }

    fn closure(&self, set: NamedSet) -> PyResult<NamedSet> {
        let a = to_set(self.inner.universe(), &set)?;
        Ok(to_names(self.inner.universe(), self.inner.closure(a)))
    }

    fn is_closed(&self, set: NamedSet) -> PyResult<bool> {
        let a = to_set(self.inner.universe(), &set)?;
        Ok(self.inner.is_closed(a))
    }

    fn is_quasi_closed(&self, set: NamedSet) -> PyResult<bool> {
        let a = to_set(self.inner.universe(), &set)?;
        Ok(closys::is_quasi_closed(&self.inner, a))
    }

    fn quasi_closed_sets(&self) -> PyResult<Vec<NamedSet>> {
        let fam = closys::quasi_closed_sets(&self.inner).map_err(value_err)?;
        Ok(family_to_lists(self.inner.universe(), &fam))
    }

    fn critical_sets(&self) -> PyResult<Vec<NamedSet>> {
        let fam = closys::critical_sets(&self.inner).map_err(value_err)?;
        Ok(family_to_lists(self.inner.universe(), &fam))
    }

    fn essential_sets(&self) -> PyResult<Vec<NamedSet>> {
        let fam = closys::essential_sets(&self.inner).map_err(value_err)?;
        Ok(family_to_lists(self.inner.universe(), &fam))
    }

    fn saturation(&self, set: NamedSet) -> PyResult<NamedSet> {
        let a = to_set(self.inner.universe(), &set)?;
        let report = QuasiReport::compute(&self.inner).map_err(value_err)?;
        Ok(to_names(self.inner.universe(), report.saturate(a)))
    }

    fn canonical_basis(&self) -> PyResult<Vec<NamedImplication>> {
        let basis = canonical_basis(&self.inner).map_err(value_err)?;
        Ok(from_implications(self.inner.universe(), &basis))
    }

    /// Total size of an implication set: sum of |lhs| + |rhs| after
    /// deduplication.
    fn basis_size(&self, implications: Vec<NamedImplication>) -> PyResult<usize> {
        let sigma = to_implications(self.inner.universe(), &implications)?;
        Ok(closys::basis_size(&sigma))
    }

    /// Validity check; returns `(equivalent, violation)` where the
    /// violation is the report line for the first failure, or None.
    fn check_basis(&self, implications: Vec<NamedImplication>) -> PyResult<(bool, Option<String>)> {
        let sigma = to_implications(self.inner.universe(), &implications)?;
        let verdict = check_basis(&sigma, &self.inner).map_err(value_err)?;
        let violation = if verdict.equivalent {
            None
        } else {
            let text = serialize_verdict(&verdict, self.inner.universe());
            text.lines().nth(1).map(|l| l.to_string())
        };
        Ok((verdict.equivalent, violation))
    }

    fn check_basis_oracle(&self, implications: Vec<NamedImplication>) -> PyResult<bool> {
        let sigma = to_implications(self.inner.universe(), &implications)?;
        closys::check_basis_oracle(&sigma, &self.inner).map_err(value_err)
    }

    fn left_sides_saturate_to_critical(
        &self,
        implications: Vec<NamedImplication>,
    ) -> PyResult<bool> {
        let sigma = to_implications(self.inner.universe(), &implications)?;
        left_sides_saturate_to_critical(&sigma, &self.inner).map_err(value_err)
    }

    /// Group implications by the closure of their left side; returns
    /// `(groups, non_essential)` where groups maps essential sets to
    /// implication lists.
    #[allow(clippy::type_complexity)]
    fn group_by_essential(
        &self,
        implications: Vec<NamedImplication>,
    ) -> PyResult<(
        Vec<(NamedSet, Vec<NamedImplication>)>,
        Vec<NamedImplication>,
    )> {
        let sigma = to_implications(self.inner.universe(), &implications)?;
        let grouping = group_by_essential(&sigma, &self.inner).map_err(value_err)?;
        let u = self.inner.universe();
        let groups = grouping
            .by_essential
            .iter()
            .map(|(e, imps)| (to_names(u, *e), from_implications(u, imps)))
            .collect();
        Ok((groups, from_implications(u, &grouping.non_essential)))
    }

    /// Mix source bases: one `(essential_set, implications)` pair per
    /// essential set of the system.
    fn mix_bases(
        &self,
        sources: Vec<(NamedSet, Vec<NamedImplication>)>,
    ) -> PyResult<Vec<NamedImplication>> {
        let u = self.inner.universe();
        let mut pairs = Vec::with_capacity(sources.len());
        for (essential, imps) in &sources {
            pairs.push((to_set(u, essential)?, to_implications(u, imps)?));
        }
        let mixed = mix_bases(&MixSpec::new(pairs), &self.inner).map_err(value_err)?;
        Ok(from_implications(self.inner.universe(), &mixed))
    }

    /// Exhaustive search for all optimal bases.
    #[pyo3(signature = (budget=None, max_universe=None))]
    fn optimal_bases(
        &self,
        budget: Option<u64>,
        max_universe: Option<usize>,
    ) -> PyResult<OptimalSearch> {
        let mut limits = SearchLimits::default();
        if let Some(budget) = budget {
            limits.budget = budget;
        }
        if let Some(cap) = max_universe {
            limits.max_universe = cap;
        }
        let report = enumerate_optimal_bases(&self.inner, &limits).map_err(value_err)?;
        let u = self.inner.universe();
        Ok(OptimalSearch {
            space: report.space.as_str().to_string(),
            complete: report.complete,
            evaluations: report.evaluations,
            optimal_size: report.optimal_size,
            optimal_bases: report
                .optimal_bases
                .iter()
                .map(|b| from_implications(u, b))
                .collect(),
            right_sums: report
                .right_sums
                .iter()
                .map(|(e, s)| (to_names(u, *e), *s))
                .collect(),
            constancy: report.constancy,
            saturation_profiles_agree: report.saturation_profiles_agree,
        })
    }

    #[pyo3(signature = (budget=None, max_universe=None))]
    fn verify_right_sum_constancy(
        &self,
        budget: Option<u64>,
        max_universe: Option<usize>,
    ) -> PyResult<bool> {
        Ok(self.optimal_bases(budget, max_universe)?.constancy)
    }

    fn left_sides_are_minimal_generators(
        &self,
        implications: Vec<NamedImplication>,
    ) -> PyResult<bool> {
        let sigma = to_implications(self.inner.universe(), &implications)?;
        left_sides_are_minimal_generators(&sigma, &self.inner).map_err(value_err)
    }

    /// The closed sets as a family document.
    fn serialize(&self) -> String {
        SystemDocument {
            universe: self.inner.universe().clone(),
            body: DocumentBody::Family(self.inner.closed().clone()),
        }
        .serialize()
    }

    fn __repr__(&self) -> String {
        format!(
            "ClosureSystem(elements={:?}, closed_sets={})",
            self.inner.universe().names(),
            self.inner.closed().len()
        )
    }
}

/// Result of an optimal-basis search.
#[pyclass]
struct OptimalSearch {
    #[pyo3(get)]
    space: String,
    #[pyo3(get)]
    complete: bool,
    #[pyo3(get)]
    evaluations: u64,
    #[pyo3(get)]
    optimal_size: usize,
    #[pyo3(get)]
    optimal_bases: Vec<Vec<NamedImplication>>,
    #[pyo3(get)]
    right_sums: Vec<(NamedSet, usize)>,
    #[pyo3(get)]
    constancy: bool,
    #[pyo3(get)]
    saturation_profiles_agree: bool,
}

#[pymethods]
impl OptimalSearch {
    fn __repr__(&self) -> String {
        format!(
            "OptimalSearch(size={}, bases={}, constancy={}, complete={})",
            self.optimal_size,
            self.optimal_bases.len(),
            self.constancy,
            self.complete
        )
    }
}

#[pymodule(name = "closys")]
fn closys_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<ClosureSystem>()?;
    m.add_class::<OptimalSearch>()?;
    Ok(())
}
