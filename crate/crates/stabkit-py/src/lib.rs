//! Python bindings for the stabiliser-state toolkit.
//!
//! Exposes the array type with validation, the reductions (rref, partial
//! trace, normal form), exact overlap/fidelity, and the bipartite
//! pair count. Qubit and row indices are 0-based on this surface.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use stabkit::array::{QubitPartition, StabiliserArray};
use stabkit::bipartite as bp;
use stabkit::cnf;
use stabkit::overlap as ov;
use stabkit::pauli::SingleQubitOp;
use stabkit::random;
use stabkit::reduce;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A stabiliser array: K generator rows over N qubits plus ±1 phases.
#[pyclass(name = "StabiliserArray", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyStabiliserArray {
    inner: StabiliserArray,
}

#[pymethods]
impl PyStabiliserArray {
    /// Parses the `stab v1` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: StabiliserArray::parse_stab(text).map_err(err)?,
        })
    }

    /// Seeded random array of exact rank k on n qubits.
    #[staticmethod]
    #[pyo3(signature = (n, k, seed = 0))]
    fn random(n: usize, k: usize, seed: u64) -> PyResult<Self> {
        Ok(Self {
            inner: random::random_array(n, k, seed).map_err(err)?,
        })
    }

    #[getter]
    fn n_qubits(&self) -> usize {
        self.inner.n_qubits()
    }

    #[getter]
    fn num_rows(&self) -> usize {
        self.inner.num_rows()
    }

    fn to_text(&self) -> String {
        self.inner.to_stab_string()
    }

    fn __str__(&self) -> String {
        self.inner.to_stab_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "StabiliserArray(n_qubits={}, num_rows={})",
            self.inner.n_qubits(),
            self.inner.num_rows()
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    /// Raises ValueError unless the array describes a stabiliser state.
    fn validate(&self) -> PyResult<()> {
        self.inner.validate().map_err(err)
    }

    fn rank(&self) -> usize {
        reduce::rank(&self.inner)
    }

    fn entropy(&self) -> usize {
        self.inner.entropy()
    }

    /// Row-reduced echelon form; the represented state is unchanged.
    fn rref(&self) -> Self {
        Self {
            inner: reduce::rref(&self.inner).array,
        }
    }

    /// Drops dependent rows, leaving an independent generator set.
    fn drop_dependent(&self) -> PyResult<Self> {
        Ok(Self {
            inner: reduce::drop_dependent(&self.inner).map_err(err)?,
        })
    }

    /// Traces out the given qubits (0-based).
    fn ptrace(&self, qubits: Vec<usize>) -> PyResult<Self> {
        Ok(Self {
            inner: reduce::ptrace(&self.inner, &qubits).map_err(err)?,
        })
    }

    fn row_transpose(&self, i: usize, j: usize) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.row_transpose(i, j).map_err(err)?,
        })
    }

    fn row_multiply(&self, src: usize, dst: usize) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.row_multiply(src, dst).map_err(err)?,
        })
    }

    /// Applies a named single-qubit op (I, PH, HPd, PHPd, HPPHPd, H).
    fn apply_op(&self, name: &str, col: usize) -> PyResult<Self> {
        let op = SingleQubitOp::by_name(name)
            .ok_or_else(|| err(format!("unknown single-qubit op `{name}`")))?;
        Ok(Self {
            inner: self.inner.apply_column_op(col, op).map_err(err)?,
        })
    }

    fn apply_cnot(&self, control: usize, target: usize) -> PyResult<Self> {
        Ok(Self {
            inner: self
                .inner
                .apply_cnot_columns(control, target)
                .map_err(err)?,
        })
    }

    /// Single-party normal form; returns a dict with the array, its rank
    /// and the recorded circuit.
    fn cnf<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        self.inner.validate().map_err(err)?;
        let res = cnf::cnf1(&self.inner);
        let out = PyDict::new(py);
        out.set_item("array", Self { inner: res.array })?;
        out.set_item("r", res.r)?;
        out.set_item(
            "circuit",
            res.ops.iter().map(|op| op.to_string()).collect::<Vec<_>>(),
        )?;
        out.set_item("column_permutation", res.column_permutation)?;
        Ok(out)
    }

    /// Overlap, Uhlmann fidelity and Bures distance with another state.
    fn overlap<'py>(&self, py: Python<'py>, other: &Self) -> PyResult<Bound<'py, PyDict>> {
        let res = ov::overlap(&self.inner, &other.inner).map_err(err)?;
        let out = PyDict::new(py);
        out.set_item("f", res.overlap.to_f64())?;
        out.set_item("f_log2", res.overlap.log2_value())?;
        out.set_item("f_u", res.uhlmann.to_f64())?;
        out.set_item("f_u_twice_log2", res.uhlmann.twice_log2_value())?;
        out.set_item("d_bures", res.bures)?;
        Ok(out)
    }

    /// EPR-pair count across a bipartition; party A is a 0-based qubit
    /// list. With `normal_form=True` the reduced two-party array and the
    /// qubit order are included.
    #[pyo3(signature = (party_a, normal_form = false))]
    fn entangle<'py>(
        &self,
        py: Python<'py>,
        party_a: Vec<usize>,
        normal_form: bool,
    ) -> PyResult<Bound<'py, PyDict>> {
        let partition = QubitPartition::new(self.inner.n_qubits(), party_a).map_err(err)?;
        let report = if normal_form {
            bp::full_normal_form(&self.inner, &partition)
        } else {
            bp::cnfp(&self.inner, &partition)
        }
        .map_err(err)?;
        let out = PyDict::new(py);
        out.set_item("p", report.p)?;
        out.set_item("bound", report.bound)?;
        out.set_item("rank", report.k)?;
        out.set_item("n_a", report.n_a)?;
        out.set_item("n_b", report.n_b)?;
        out.set_item("qubit_order", report.qubit_order.clone())?;
        out.set_item(
            "normal_form",
            report.normal_form.map(|inner| Self { inner }),
        )?;
        Ok(out)
    }
}

#[pymodule]
fn stabkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyStabiliserArray>()?;
    m.add("STAB_FORMAT_VERSION", "stab v1")?;
    Ok(())
}
