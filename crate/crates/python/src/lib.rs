use std::sync::Arc;

use multiring::chain::{ideal_subspace_chain, is_artin, OperationOrder};
use multiring::decomposition::decompose_artin;
use multiring::multispace::{
    is_ideal_subspace_by_ideals, is_ideal_subspace_direct, is_multi_field,
    is_subspace_by_subgroups, is_subspace_by_subrings, is_subspace_direct, SubsetSelection,
};
use multiring::ring::{field_defect, validate_ring};
use multiring::{
    decompose_unit, enumerate_ideals, idempotents, make_cyclic_ring, make_product_ring,
    make_ring_from_tables, maximal_ideals, parse_spec, serialize_space, ElementId, ElementSet,
    Error, FiniteRing, Limits, Universe,
};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(pymultiring, MultiringError, PyValueError);
create_exception!(pymultiring, BudgetExceeded, MultiringError);

type ComponentTuple = (usize, Option<String>, Vec<String>);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::CapExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        other => MultiringError::new_err(other.to_string()),
    }
}

fn limits(max_ring_size: Option<usize>, subset_budget: Option<u64>) -> Limits {
    let d = Limits::default();
    Limits {
        max_ring_size: max_ring_size.unwrap_or(d.max_ring_size),
        subset_budget: subset_budget.unwrap_or(d.subset_budget),
    }
}

fn names<'a, I: IntoIterator<Item = &'a ElementId>>(u: &Universe, ids: I) -> Vec<String> {
    ids.into_iter().map(|&id| u.label(id).to_string()).collect()
}

/// A finite ring with labelled elements.
#[pyclass(name = "Ring", module = "pymultiring", frozen)]
struct PyRing {
    ring: FiniteRing,
    universe: Arc<Universe>,
    limits: Limits,
}

impl PyRing {
    fn id(&self, label: &str) -> PyResult<ElementId> {
        self.universe
            .id(label)
            .filter(|&id| self.ring.contains(id))
            .ok_or_else(|| {
                MultiringError::new_err(format!("{label:?} is not an element of the ring"))
            })
    }

    fn label(&self, id: ElementId) -> String {
        self.universe.label(id).to_string()
    }

    fn sets(&self, sets: Vec<ElementSet>) -> Vec<Vec<String>> {
        sets.iter().map(|s| names(&self.universe, s)).collect()
    }

    fn numbered(ring: FiniteRing, limits: Limits) -> Self {
        let universe = Arc::new(Universe::numbered(ring.size()));
        Self {
            ring,
            universe,
            limits,
        }
    }
}

#[pymethods]
impl PyRing {
    /// `Z_n` with elements labelled "0", .., "n-1".
    #[staticmethod]
    #[pyo3(signature = (n, max_ring_size=None))]
    fn cyclic(n: usize, max_ring_size: Option<usize>) -> PyResult<Self> {
        let limits = limits(max_ring_size, None);
        Ok(Self::numbered(
            make_cyclic_ring(n, &limits).map_err(to_py)?,
            limits,
        ))
    }

    /// Ring from label tables: `add[i][j]` is `elements[i] + elements[j]`.
    #[staticmethod]
    fn from_tables(
        name: &str,
        elements: Vec<String>,
        add: Vec<Vec<String>>,
        mul: Vec<Vec<String>>,
    ) -> PyResult<Self> {
        let universe = Universe::new(&elements).map_err(to_py)?;
        let ring = make_ring_from_tables(&universe, name, &elements, &add, &mul).map_err(to_py)?;
        Ok(Self {
            ring,
            universe: Arc::new(universe),
            limits: Limits::default(),
        })
    }

    /// Direct product; elements are labelled "0", .., "|a||b|-1" with the
    /// pair `(i, j)` at `i * |b| + j`.
    #[staticmethod]
    fn product(a: &PyRing, b: &PyRing) -> PyResult<Self> {
        let ring = make_product_ring(&a.ring, &b.ring, &a.limits).map_err(to_py)?;
        Ok(Self::numbered(ring, a.limits))
    }

    #[getter]
    fn name(&self) -> &str {
        self.ring.name()
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        names(&self.universe, self.ring.elements())
    }

    #[getter]
    fn zero(&self) -> String {
        self.label(self.ring.zero())
    }

    #[getter]
    fn unit(&self) -> Option<String> {
        self.ring.unit().map(|u| self.label(u))
    }

    fn __len__(&self) -> usize {
        self.ring.size()
    }

    fn __repr__(&self) -> String {
        format!("Ring({:?}, size={})", self.ring.name(), self.ring.size())
    }

    fn add(&self, x: &str, y: &str) -> PyResult<String> {
        let sum = self
            .ring
            .add(self.id(x)?, self.id(y)?)
            .expect("both operands are elements");
        Ok(self.label(sum))
    }

    fn mul(&self, x: &str, y: &str) -> PyResult<String> {
        let product = self
            .ring
            .mul(self.id(x)?, self.id(y)?)
            .expect("both operands are elements");
        Ok(self.label(product))
    }

    fn is_commutative(&self) -> bool {
        self.ring.is_commutative()
    }

    fn is_field(&self) -> bool {
        field_defect(&self.ring).is_none()
    }

    /// Axiom failures as `(axiom, witness)` pairs; empty for a valid ring.
    fn validate(&self) -> Vec<(String, Vec<String>)> {
        validate_ring(&self.ring)
            .failures()
            .iter()
            .map(|f| {
                (
                    f.axiom.name().to_string(),
                    names(&self.universe, &f.witness),
                )
            })
            .collect()
    }

    fn ideals(&self) -> PyResult<Vec<Vec<String>>> {
        Ok(self.sets(enumerate_ideals(&self.ring, &self.limits).map_err(to_py)?))
    }

    fn maximal_ideals(&self) -> PyResult<Vec<Vec<String>>> {
        Ok(self.sets(maximal_ideals(&self.ring, &self.limits).map_err(to_py)?))
    }

    fn idempotents(&self) -> Vec<String> {
        names(&self.universe, &idempotents(&self.ring))
    }

    fn decompose_unit(&self) -> PyResult<Vec<String>> {
        Ok(names(
            &self.universe,
            &decompose_unit(&self.ring).map_err(to_py)?,
        ))
    }
}

/// A validated multi-ring space. Ring indices are 1-based.
#[pyclass(name = "MultiRingSpace", module = "pymultiring", frozen)]
struct PySpace {
    space: multiring::MultiRingSpace,
    universe: Arc<Universe>,
    limits: Limits,
}

impl PySpace {
    fn selection(&self, elements: Vec<String>, ops: Vec<usize>) -> PyResult<SubsetSelection> {
        let ops = ops
            .into_iter()
            .map(|k| {
                k.checked_sub(1)
                    .filter(|&i| i < self.space.ring_count())
                    .ok_or_else(|| {
                        to_py(Error::RingIndexOutOfRange {
                            index: k,
                            count: self.space.ring_count(),
                        })
                    })
            })
            .collect::<PyResult<Vec<_>>>()?;
        self.space.selection(&elements, &ops).map_err(to_py)
    }

    fn term(&self, s: &SubsetSelection) -> (Vec<String>, Vec<usize>) {
        (
            names(&self.universe, &s.elements),
            s.ops.iter().map(|k| k + 1).collect(),
        )
    }
}

#[pymethods]
impl PySpace {
    /// Parses and validates a JSON description.
    #[staticmethod]
    #[pyo3(signature = (text, max_ring_size=None, subset_budget=None))]
    fn from_spec(
        text: &str,
        max_ring_size: Option<usize>,
        subset_budget: Option<u64>,
    ) -> PyResult<Self> {
        let limits = limits(max_ring_size, subset_budget);
        let doc = parse_spec(text).map_err(|e| to_py(e.into()))?;
        let space = doc.build(&limits).map_err(to_py)?;
        let universe = Arc::new(space.universe().clone());
        Ok(Self {
            space,
            universe,
            limits,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (path, max_ring_size=None, subset_budget=None))]
    fn from_file(
        path: std::path::PathBuf,
        max_ring_size: Option<usize>,
        subset_budget: Option<u64>,
    ) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| MultiringError::new_err(format!("{}: {e}", path.display())))?;
        Self::from_spec(&text, max_ring_size, subset_budget)
    }

    fn to_spec(&self) -> String {
        serialize_space(&self.space)
    }

    #[getter]
    fn universe(&self) -> Vec<String> {
        self.universe.labels().to_vec()
    }

    #[getter]
    fn rings(&self) -> Vec<PyRing> {
        self.space
            .rings()
            .iter()
            .map(|r| PyRing {
                ring: r.clone(),
                universe: Arc::clone(&self.universe),
                limits: self.limits,
            })
            .collect()
    }

    #[getter]
    fn mixed_law_instances(&self) -> usize {
        self.space.mixed_law_instances()
    }

    fn __len__(&self) -> usize {
        self.space.ring_count()
    }

    fn __repr__(&self) -> String {
        let rings: Vec<&str> = self.space.rings().iter().map(|r| r.name()).collect();
        format!("MultiRingSpace({})", rings.join(", "))
    }

    /// `criterion` is "t21" (subrings), "t22" (subgroups) or "direct".
    #[pyo3(signature = (elements, ops, criterion="t21"))]
    fn is_subspace(
        &self,
        elements: Vec<String>,
        ops: Vec<usize>,
        criterion: &str,
    ) -> PyResult<bool> {
        let s = self.selection(elements, ops)?;
        let check = match criterion {
            "t21" => is_subspace_by_subrings,
            "t22" => is_subspace_by_subgroups,
            "direct" => is_subspace_direct,
            other => {
                return Err(MultiringError::new_err(format!(
                    "unknown criterion {other:?}"
                )))
            }
        };
        check(&self.space, &s).map_err(to_py)
    }

    /// `criterion` is "t23" (ideals) or "direct".
    #[pyo3(signature = (elements, ops, criterion="t23"))]
    fn is_ideal_subspace(
        &self,
        elements: Vec<String>,
        ops: Vec<usize>,
        criterion: &str,
    ) -> PyResult<bool> {
        let s = self.selection(elements, ops)?;
        let check = match criterion {
            "t23" => is_ideal_subspace_by_ideals,
            "direct" => is_ideal_subspace_direct,
            other => {
                return Err(MultiringError::new_err(format!(
                    "unknown criterion {other:?}"
                )))
            }
        };
        check(&self.space, &s).map_err(to_py)
    }

    /// Chain terms as `(elements, ops)` pairs.
    #[pyo3(signature = (order=None))]
    fn chain(&self, order: Option<Vec<usize>>) -> PyResult<Vec<(Vec<String>, Vec<usize>)>> {
        let m = self.space.ring_count();
        let order = match order {
            None => OperationOrder::identity(m),
            Some(o) => {
                let zero_based = o.iter().map(|&k| k.wrapping_sub(1)).collect();
                OperationOrder::new(zero_based, m).map_err(to_py)?
            }
        };
        let c = ideal_subspace_chain(&self.space, &order, &self.limits).map_err(to_py)?;
        Ok(c.terms.iter().map(|t| self.term(t)).collect())
    }

    fn is_artin(&self) -> PyResult<bool> {
        Ok(is_artin(&self.space, &self.limits).map_err(to_py)?.artin)
    }

    fn is_multi_field(&self) -> bool {
        is_multi_field(&self.space)
    }

    /// Components as `(ring, idempotent or None, elements)` triples.
    fn decompose(&self) -> PyResult<Vec<ComponentTuple>> {
        let d = decompose_artin(&self.space, &self.limits).map_err(to_py)?;
        Ok(d.components
            .iter()
            .map(|c| {
                (
                    c.ring + 1,
                    c.idempotent.map(|e| self.universe.label(e).to_string()),
                    names(&self.universe, &c.selection.elements),
                )
            })
            .collect())
    }
}

#[pymodule]
pub fn pymultiring(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<PySpace>()?;
    m.add("MultiringError", m.py().get_type::<MultiringError>())?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    Ok(())
}
