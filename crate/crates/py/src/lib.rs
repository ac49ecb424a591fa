//! Python bindings: symbol tables, trees, workspaces, recognizers and the
//! variety deciders.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use uta::trees::{enumerate_trees, parse_tree};
use uta::varieties::{decide_variety, DEFAULT_BOUNDS};
use uta::{FinitenessVerdict, VarietyKind};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "SymbolTable", frozen, skip_from_py_object, module = "uta_py")]
#[derive(Clone)]
pub struct PySymbolTable(uta::SymbolTable);

#[pymethods]
impl PySymbolTable {
    #[new]
    fn new(operators: Vec<String>, leaves: Vec<String>) -> PyResult<Self> {
        uta::SymbolTable::new(&operators, &leaves).map(Self).map_err(err)
    }

    #[getter]
    fn operators(&self) -> Vec<String> {
        self.0.operators().iter().map(|s| s.to_string()).collect()
    }

    #[getter]
    fn leaves(&self) -> Vec<String> {
        self.0.leaves().iter().map(|s| s.to_string()).collect()
    }

    fn parse(&self, text: &str) -> PyResult<PyTree> {
        parse_tree(text, &self.0).map(PyTree).map_err(err)
    }

    /// Trees up to `max_size` nodes and `max_arity` children, smallest first.
    #[pyo3(signature = (max_size, max_arity = 3))]
    fn enumerate(&self, max_size: usize, max_arity: usize) -> Vec<PyTree> {
        enumerate_trees(&self.0, max_size, max_arity).into_iter().map(PyTree).collect()
    }
}

#[pyclass(name = "Tree", frozen, eq, hash, skip_from_py_object, module = "uta_py")]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyTree(uta::Tree);

#[pymethods]
impl PyTree {
    #[getter]
    fn root(&self) -> String {
        self.0.root().to_string()
    }

    #[getter]
    fn height(&self) -> usize {
        self.0.height()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    #[getter]
    fn children(&self) -> Vec<PyTree> {
        self.0.children().iter().cloned().map(PyTree).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tree('{}')", self.0)
    }
}

#[pyclass(name = "Recognizer", frozen, skip_from_py_object, module = "uta_py")]
#[derive(Clone)]
pub struct PyRecognizer(uta::Recognizer);

impl PyRecognizer {
    fn tree(&self, t: &Bound<'_, PyAny>) -> PyResult<uta::Tree> {
        if let Ok(t) = t.cast::<PyTree>() {
            return Ok(t.get().0.clone());
        }
        parse_tree(&t.extract::<String>()?, self.0.table()).map_err(err)
    }
}

#[pymethods]
impl PyRecognizer {
    #[getter]
    fn symbols(&self) -> PySymbolTable {
        PySymbolTable(self.0.table().clone())
    }

    /// Name of the algebra element a tree evaluates to.
    fn eval(&self, t: &Bound<'_, PyAny>) -> PyResult<String> {
        let v = self.0.eval(&self.tree(t)?).map_err(err)?;
        Ok(self.0.algebra().elements()[v].clone())
    }

    fn accepts(&self, t: &Bound<'_, PyAny>) -> PyResult<bool> {
        self.0.accepts(&self.tree(t)?).map_err(err)
    }

    fn complement(&self) -> Self {
        Self(self.0.complement())
    }

    fn intersect(&self, other: &Self) -> PyResult<Self> {
        self.0.intersect(&other.0).map(Self).map_err(err)
    }

    fn union(&self, other: &Self) -> PyResult<Self> {
        self.0.union(&other.0).map(Self).map_err(err)
    }

    fn trim(&self) -> Self {
        Self(self.0.trim())
    }

    /// Number of elements of the syntactic algebra.
    fn sa_size(&self) -> PyResult<usize> {
        Ok(self.0.syntactic_of().map_err(err)?.0.algebra.size())
    }

    fn syntactic(&self) -> PyResult<Self> {
        Ok(Self(self.0.syntactic_of().map_err(err)?.1))
    }

    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn smallest_member(&self) -> Option<PyTree> {
        self.0.smallest_member().map(PyTree)
    }

    /// The members when finite, `None` otherwise.
    fn finite_members(&self) -> PyResult<Option<Vec<PyTree>>> {
        Ok(match self.0.is_finite().map_err(err)? {
            FinitenessVerdict::Finite(ts) => Some(ts.into_iter().map(PyTree).collect()),
            FinitenessVerdict::Infinite { .. } => None,
        })
    }

    fn is_finite(&self) -> PyResult<bool> {
        Ok(matches!(self.0.is_finite().map_err(err)?, FinitenessVerdict::Finite(_)))
    }

    fn equivalent(&self, other: &Self) -> PyResult<bool> {
        self.0.equivalent(&other.0).map_err(err)
    }

    fn counterexample(&self, other: &Self) -> PyResult<Option<PyTree>> {
        Ok(self.0.counterexample(&other.0).map_err(err)?.map(PyTree))
    }

    /// Variety membership as a JSON string. `kind` is one of def, rdef,
    /// gdef, loc, pwt, ap, nil.
    #[pyo3(signature = (kind, k = None, h = None, max_size = DEFAULT_BOUNDS.0, max_arity = DEFAULT_BOUNDS.1))]
    fn decide(&self, kind: &str, k: Option<usize>, h: Option<usize>, max_size: usize, max_arity: usize) -> PyResult<String> {
        let need = |v: Option<usize>, name: &str| v.ok_or_else(|| PyValueError::new_err(format!("{kind} needs {name}")));
        let kind = match kind {
            "def" => VarietyKind::Def(k),
            "rdef" => VarietyKind::RDef(need(k, "k")?),
            "gdef" => VarietyKind::GDef { h: need(h, "h")?, k: need(k, "k")? },
            "loc" => VarietyKind::Loc(need(k, "k")?),
            "pwt" => VarietyKind::Pwt(need(k, "k")?),
            "ap" => VarietyKind::Aperiodic,
            "nil" => VarietyKind::Nil,
            other => return Err(PyValueError::new_err(format!("unknown kind `{other}`"))),
        };
        let verdict = decide_variety(&self.0, kind, (max_size, max_arity)).map_err(err)?;
        Ok(verdict.to_json().to_string())
    }
}

#[pyclass(name = "Workspace", module = "uta_py")]
pub struct PyWorkspace(uta::Workspace);

#[pymethods]
impl PyWorkspace {
    /// An empty workspace, or the bundled fixtures with `bundled=True`.
    #[new]
    #[pyo3(signature = (bundled = false))]
    fn new(bundled: bool) -> Self {
        Self(if bundled { uta::fixtures::bundled() } else { uta::Workspace::default() })
    }

    #[staticmethod]
    fn load(paths: Vec<String>) -> PyResult<Self> {
        uta::Workspace::load_files(&paths).map(Self).map_err(err)
    }

    #[pyo3(signature = (text, file = None))]
    fn load_str(&mut self, text: &str, file: Option<&str>) -> PyResult<()> {
        self.0.load_str(file.unwrap_or("<string>"), text).map_err(err)
    }

    fn recognizer(&self, name: &str) -> PyResult<PyRecognizer> {
        self.0
            .recognizer(name)
            .cloned()
            .map(PyRecognizer)
            .ok_or_else(|| PyKeyError::new_err(name.to_string()))
    }

    fn symbols(&self, name: &str) -> PyResult<PySymbolTable> {
        self.0.symbols.get(name).cloned().map(PySymbolTable).ok_or_else(|| PyKeyError::new_err(name.to_string()))
    }

    #[getter]
    fn recognizers(&self) -> Vec<String> {
        self.0.recognizers.keys().cloned().collect()
    }

    fn dump(&self) -> String {
        self.0.dump()
    }
}

#[pymodule]
fn uta_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySymbolTable>()?;
    m.add_class::<PyTree>()?;
    m.add_class::<PyRecognizer>()?;
    m.add_class::<PyWorkspace>()?;
    Ok(())
}
