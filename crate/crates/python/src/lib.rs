//! Python bindings: `import pynodal`.

#[pyo3::pymodule]
mod pynodal {
    use std::sync::Arc;

    use nodal_conics::burnside::{BurnsideElement, BurnsideRing};
    use nodal_conics::cli::{self, Command, CliError, Format, RunConfig};
    use nodal_conics::geometry::QuadExt;
    use nodal_conics::nodal::{parse_sigma_spec, verify as verify_sigma, verify_all as verify_every};
    use num_rational::BigRational;
    use pyo3::exceptions::{PyTypeError, PyValueError};
    use pyo3::prelude::*;

    fn value_error(e: impl std::fmt::Display) -> PyErr {
        PyValueError::new_err(e.to_string())
    }

    fn to_python<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
        py.import("json")?.call_method1("loads", (v.to_string(),))
    }

    /// Runs a CLI command and returns its JSON report.
    fn run_json<'py>(py: Python<'py>, command: Command) -> PyResult<Bound<'py, PyAny>> {
        let config = RunConfig {
            command,
            format: Format::Json,
            output: None,
        };
        let outcome = cli::run(&config).map_err(value_error)?;
        let value: serde_json::Value = serde_json::from_str(&outcome.output).map_err(value_error)?;
        to_python(py, &value)
    }

    fn group(spec: &str) -> PyResult<nodal_conics::permgroup::PermGroup> {
        cli::parse_group_spec(spec).map_err(|e: CliError| value_error(e))
    }

    /// Burnside ring of a subgroup of a symmetric group.
    #[pyclass(name = "BurnsideRing", frozen)]
    struct PyRing(Arc<BurnsideRing>);

    #[pymethods]
    impl PyRing {
        #[new]
        fn new(group_spec: &str) -> PyResult<Self> {
            Ok(PyRing(BurnsideRing::new(group(group_spec)?)))
        }

        /// Class labels in basis order.
        fn classes(&self) -> Vec<String> {
            (0..self.0.rank()).map(|i| self.0.class_label(i)).collect()
        }

        fn marks(&self) -> Vec<Vec<i64>> {
            self.0.table_of_marks().rows().to_vec()
        }

        /// `[G/H]` for the subgroup generated by `subgroup`.
        fn orbit_type(&self, subgroup: &str) -> PyResult<PyElement> {
            let h = nodal_conics::permgroup::PermGroup::parse_generators(subgroup, self.0.group().degree())
                .map_err(value_error)?;
            BurnsideElement::orbit_type(&self.0, &h).map(PyElement).map_err(value_error)
        }

        fn one(&self) -> PyElement {
            PyElement(BurnsideElement::one(&self.0))
        }

        fn element(&self, coeffs: Vec<i64>) -> PyResult<PyElement> {
            if coeffs.len() != self.0.rank() {
                return Err(value_error(format!("expected {} coefficients", self.0.rank())));
            }
            Ok(PyElement(BurnsideElement::from_coeffs(&self.0, coeffs)))
        }

        fn __repr__(&self) -> String {
            format!("BurnsideRing({})", self.0.group().name())
        }
    }

    /// A virtual G-set, stored in the basis of orbit types.
    #[pyclass(name = "BurnsideElement", frozen)]
    struct PyElement(BurnsideElement);

    #[pymethods]
    impl PyElement {
        #[getter]
        fn coeffs(&self) -> Vec<i64> {
            self.0.coeffs().to_vec()
        }

        /// Marks against every subgroup class.
        fn mark_vector(&self) -> Vec<i64> {
            self.0.mark_vector()
        }

        fn __add__(&self, other: &PyElement) -> PyResult<PyElement> {
            self.0.add(&other.0).map(PyElement).map_err(value_error)
        }

        fn __sub__(&self, other: &PyElement) -> PyResult<PyElement> {
            self.0.sub(&other.0).map(PyElement).map_err(value_error)
        }

        fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<PyElement> {
            if let Ok(k) = other.extract::<i64>() {
                return Ok(PyElement(self.0.scale(k)));
            }
            let other = other
                .cast::<PyElement>()
                .map_err(|_| PyTypeError::new_err("expected BurnsideElement or int"))?;
            self.0.mul(&other.get().0).map(PyElement).map_err(value_error)
        }

        fn __rmul__(&self, k: i64) -> PyElement {
            PyElement(self.0.scale(k))
        }

        fn __neg__(&self) -> PyElement {
            PyElement(self.0.neg())
        }

        fn __eq__(&self, other: &PyElement) -> PyResult<bool> {
            self.0.equals(&other.0).map_err(value_error)
        }

        fn __repr__(&self) -> String {
            self.0.to_string()
        }
    }

    /// Checks one configuration; returns the report as a dict.
    #[pyfunction]
    fn verify<'py>(py: Python<'py>, group_spec: &str, sigma: &str) -> PyResult<Bound<'py, PyAny>> {
        let ring = BurnsideRing::new(group(group_spec)?);
        let sigma = parse_sigma_spec(&ring, sigma).map_err(value_error)?;
        let report = verify_sigma(&sigma).map_err(value_error)?;
        to_python(py, &report.to_json_value())
    }

    /// Reports for every configuration of four points under the group.
    #[pyfunction]
    fn verify_all<'py>(py: Python<'py>, group_spec: &str) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let ring = BurnsideRing::new(group(group_spec)?);
        let reports = verify_every(&ring).map_err(value_error)?;
        reports.iter().map(|r| to_python(py, &r.to_json_value())).collect()
    }

    #[pyfunction]
    fn table_of_marks<'py>(py: Python<'py>, group_spec: &str) -> PyResult<Bound<'py, PyAny>> {
        run_json(py, Command::Marks { group: group(group_spec)? })
    }

    #[pyfunction]
    fn klein_counterexample<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        run_json(py, Command::Klein)
    }

    #[pyfunction]
    #[pyo3(signature = (case = 8, a = 1, b = 1, c = "1", d = "1"))]
    fn d8_counterexample<'py>(
        py: Python<'py>,
        case: usize,
        a: i64,
        b: i64,
        c: &str,
        d: &str,
    ) -> PyResult<Bound<'py, PyAny>> {
        if a.abs() != 1 || b.abs() != 1 {
            return Err(value_error("a and b must be 1 or -1"));
        }
        if !(1..=9).contains(&case) {
            return Err(value_error("case must be between 1 and 9"));
        }
        let rational = |s: &str| -> PyResult<QuadExt> {
            let q: BigRational = s.trim().parse().map_err(|_| value_error(format!("not a rational number: {s:?}")))?;
            if q == BigRational::from_integer(0.into()) {
                return Err(value_error("c and d must be nonzero"));
            }
            Ok(QuadExt::rational(q))
        };
        let command = Command::D8 {
            a,
            b,
            c: rational(c)?,
            d: rational(d)?,
            case,
        };
        run_json(py, command)
    }

    /// Every subgroup class of S4 against every configuration.
    #[pyfunction]
    fn theorem_sweep<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        run_json(py, Command::TheoremSweep)
    }
}
