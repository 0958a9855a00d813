#!/usr/bin/env python3
"""Regenerate src/mscbench/data/msc2020.tsv.

The official MSC 2020 distribution is not redistributable here, so the
shipped dataset is a deterministic reconstruction pinned to the strict
published level counts (63 top-level, 529 second-level, 6022 third-level
entries). Every code that appears in the bundled study fixture carries
its authentic meaning; remaining subdivisions are systematically
generated placeholders. Codes known to be absent from MSC 2020 (the two
hallucinations caught in the study, 35Q72 and 65F90) are blocked from
generation so validation classifies them as unknown.

Run from the repo root:  python tools/build_taxonomy.py
"""

from __future__ import annotations

from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "mscbench" / "data" / "msc2020.tsv"

TARGET_TOP = 63
TARGET_SECOND = 529
TARGET_THIRD = 6022

# Codes that must never exist in the shipped dataset.
BLOCKED = {"35Q72", "65F90"}

TOPS: list[tuple[str, str]] = [
    ("00", "General and overarching topics; collections"),
    ("01", "History and biography"),
    ("03", "Mathematical logic and foundations"),
    ("05", "Combinatorics"),
    ("06", "Order, lattices, ordered algebraic structures"),
    ("08", "General algebraic systems"),
    ("11", "Number theory"),
    ("12", "Field theory and polynomials"),
    ("13", "Commutative algebra"),
    ("14", "Algebraic geometry"),
    ("15", "Linear and multilinear algebra; matrix theory"),
    ("16", "Associative rings and algebras"),
    ("17", "Nonassociative rings and algebras"),
    ("18", "Category theory; homological algebra"),
    ("19", "K-theory"),
    ("20", "Group theory and generalizations"),
    ("22", "Topological groups, Lie groups"),
    ("26", "Real functions"),
    ("28", "Measure and integration"),
    ("30", "Functions of a complex variable"),
    ("31", "Potential theory"),
    ("32", "Several complex variables and analytic spaces"),
    ("33", "Special functions"),
    ("34", "Ordinary differential equations"),
    ("35", "Partial differential equations"),
    ("37", "Dynamical systems and ergodic theory"),
    ("39", "Difference and functional equations"),
    ("40", "Sequences, series, summability"),
    ("41", "Approximations and expansions"),
    ("42", "Harmonic analysis on Euclidean spaces"),
    ("43", "Abstract harmonic analysis"),
    ("44", "Integral transforms, operational calculus"),
    ("45", "Integral equations"),
    ("46", "Functional analysis"),
    ("47", "Operator theory"),
    ("49", "Calculus of variations and optimal control; optimization"),
    ("51", "Geometry"),
    ("52", "Convex and discrete geometry"),
    ("53", "Differential geometry"),
    ("54", "General topology"),
    ("55", "Algebraic topology"),
    ("57", "Manifolds and cell complexes"),
    ("58", "Global analysis, analysis on manifolds"),
    ("60", "Probability theory and stochastic processes"),
    ("62", "Statistics"),
    ("65", "Numerical analysis"),
    ("68", "Computer science"),
    ("70", "Mechanics of particles and systems"),
    ("74", "Mechanics of deformable solids"),
    ("76", "Fluid mechanics"),
    ("78", "Optics, electromagnetic theory"),
    ("80", "Classical thermodynamics, heat transfer"),
    ("81", "Quantum theory"),
    ("82", "Statistical mechanics, structure of matter"),
    ("83", "Relativity and gravitational theory"),
    ("85", "Astronomy and astrophysics"),
    ("86", "Geophysics"),
    ("90", "Operations research, mathematical programming"),
    ("91", "Game theory, economics, finance, and other social and behavioral sciences"),
    ("92", "Biology and other natural sciences"),
    ("93", "Systems theory; control"),
    ("94", "Information and communication theory, circuits"),
    ("97", "Mathematics education"),
]

# Second-level letter areas per class. Lists longer than the global
# budget allows are trimmed from the tail (protected areas kept), so
# order roughly follows the scheme's own ordering.
AREAS: dict[str, list[tuple[str, str]]] = {
    "00": [("A", "General and miscellaneous specific topics"),
           ("B", "Conference proceedings and collections of articles")],
    "01": [("A", "History of mathematics and mathematicians")],
    "03": [("A", "Philosophical aspects of logic and foundations"),
           ("B", "General logic"),
           ("C", "Model theory"),
           ("D", "Computability and recursion theory"),
           ("E", "Set theory"),
           ("F", "Proof theory and constructive mathematics"),
           ("G", "Algebraic logic"),
           ("H", "Nonstandard models")],
    "05": [("A", "Enumerative combinatorics"),
           ("B", "Designs and configurations"),
           ("C", "Graph theory"),
           ("D", "Extremal combinatorics"),
           ("E", "Algebraic combinatorics")],
    "06": [("A", "Ordered sets"),
           ("B", "Lattices"),
           ("C", "Modular lattices, complemented lattices"),
           ("D", "Distributive lattices"),
           ("E", "Boolean algebras (Boolean rings)"),
           ("F", "Ordered structures")],
    "08": [("A", "Algebraic structures"),
           ("B", "Varieties"),
           ("C", "Other classes of algebras")],
    "11": [("A", "Elementary number theory"),
           ("B", "Sequences and sets"),
           ("C", "Polynomials and matrices in number theory"),
           ("D", "Diophantine equations"),
           ("E", "Forms and linear algebraic groups"),
           ("F", "Discrete groups and automorphic forms"),
           ("G", "Arithmetic algebraic geometry (Diophantine geometry)"),
           ("H", "Geometry of numbers"),
           ("J", "Diophantine approximation, transcendental number theory"),
           ("K", "Probabilistic theory: distribution modulo 1; metric theory of algorithms"),
           ("L", "Exponential sums and character sums"),
           ("M", "Zeta and L-functions: analytic theory"),
           ("N", "Multiplicative number theory"),
           ("P", "Additive number theory; partitions"),
           ("R", "Algebraic number theory: global fields"),
           ("S", "Algebraic number theory: local fields"),
           ("T", "Finite fields and commutative rings (number-theoretic aspects)"),
           ("U", "Connections of number theory and logic"),
           ("Y", "Computational number theory"),
           ("Z", "Miscellaneous applications of number theory")],
    "12": [("D", "Real and complex fields"),
           ("E", "General field theory"),
           ("F", "Field extensions"),
           ("G", "Homological methods (field theory)"),
           ("H", "Differential and difference algebra"),
           ("J", "Topological fields"),
           ("K", "Generalizations of fields"),
           ("L", "Connections of field theory with logic")],
    "13": [("A", "General commutative ring theory"),
           ("B", "Commutative ring extensions and related topics"),
           ("C", "Theory of modules and ideals in commutative rings"),
           ("D", "Homological methods in commutative ring theory"),
           ("E", "Chain conditions, finiteness conditions in commutative algebra"),
           ("F", "Arithmetic rings and other special commutative rings"),
           ("G", "Integral domains"),
           ("H", "Local rings and semilocal rings"),
           ("J", "Topological rings and modules"),
           ("N", "Differential algebra"),
           ("P", "Computational aspects and applications of commutative rings")],
    "14": [("A", "Foundations of algebraic geometry"),
           ("B", "Local theory in algebraic geometry"),
           ("C", "Cycles and subschemes"),
           ("D", "Families, fibrations in algebraic geometry"),
           ("E", "Birational geometry"),
           ("F", "(Co)homology theory in algebraic geometry"),
           ("G", "Arithmetic problems in algebraic geometry; Diophantine geometry"),
           ("H", "Curves in algebraic geometry"),
           ("J", "Surfaces and higher-dimensional varieties"),
           ("K", "Abelian varieties and schemes"),
           ("L", "Algebraic groups"),
           ("M", "Special varieties"),
           ("N", "Projective and enumerative algebraic geometry"),
           ("P", "Real algebraic and real-analytic geometry"),
           ("Q", "Computational aspects in algebraic geometry"),
           ("R", "Affine geometry"),
           ("T", "Tropical geometry")],
    "15": [("A", "Basic linear algebra"),
           ("B", "Special matrices")],
    "16": [("B", "General and miscellaneous (associative rings and algebras)"),
           ("D", "Modules, bimodules and ideals in associative algebras"),
           ("E", "Homological methods in associative algebras"),
           ("G", "Representation theory of associative rings and algebras"),
           ("H", "Algebras and orders"),
           ("K", "Division rings and semisimple Artin rings"),
           ("L", "Local rings and generalizations"),
           ("N", "Radicals and radical properties of associative rings"),
           ("P", "Chain conditions, growth conditions, and other forms of finiteness"),
           ("R", "Rings with polynomial identity"),
           ("S", "Associative rings and algebras arising under various constructions"),
           ("T", "Hopf algebras, quantum groups and related topics"),
           ("U", "Conditions on elements"),
           ("W", "Associative rings and algebras with additional structure"),
           ("Y", "Generalizations of associative rings and algebras"),
           ("Z", "Computational aspects of associative rings and algebras")],
    "17": [("A", "General nonassociative rings"),
           ("B", "Lie algebras and Lie superalgebras"),
           ("C", "Jordan algebras (algebras, triples and pairs)"),
           ("D", "Other nonassociative rings and algebras")],
    "18": [("A", "General theory of categories and functors"),
           ("B", "Special categories"),
           ("C", "Categories and theories"),
           ("D", "Categorical structures"),
           ("E", "Categorical algebra"),
           ("F", "Categories and geometry"),
           ("G", "Homological algebra in category theory"),
           ("M", "Monoidal categories and operads"),
           ("N", "Higher categories and homotopical algebra")],
    "19": [("A", "Grothendieck groups and K0"),
           ("B", "Whitehead groups and K1"),
           ("C", "Steinberg groups and K2"),
           ("D", "Higher algebraic K-theory"),
           ("E", "K-theory in geometry"),
           ("F", "K-theory in number theory"),
           ("G", "K-theory of forms"),
           ("J", "Obstructions from topology"),
           ("K", "K-theory and operator algebras"),
           ("L", "Topological K-theory"),
           ("M", "Miscellaneous applications of K-theory")],
    "20": [("A", "Foundations of group theory"),
           ("B", "Permutation groups"),
           ("C", "Representation theory of groups"),
           ("D", "Abstract finite groups"),
           ("E", "Structure and classification of infinite or finite groups"),
           ("F", "Special aspects of infinite or finite groups"),
           ("G", "Linear algebraic groups and related topics"),
           ("H", "Other groups of matrices"),
           ("J", "Connections of group theory with homological algebra and category theory"),
           ("K", "Abelian groups"),
           ("L", "Groupoids"),
           ("M", "Semigroups"),
           ("N", "Other generalizations of groups"),
           ("P", "Probabilistic methods in group theory")],
    "22": [("A", "Topological and differentiable algebraic systems"),
           ("B", "Locally compact abelian groups"),
           ("C", "Compact groups"),
           ("D", "Locally compact groups and their algebras"),
           ("E", "Lie groups"),
           ("F", "Noncompact transformation groups")],
    "26": [("A", "Functions of one real variable"),
           ("B", "Functions of several real variables"),
           ("C", "Polynomials, rational functions in real analysis"),
           ("D", "Inequalities in real analysis"),
           ("E", "Miscellaneous topics in real functions")],
    "28": [("A", "Classical measure theory"),
           ("B", "Set functions, measures and integrals with values in abstract spaces"),
           ("C", "Set functions and measures on spaces with additional structure"),
           ("D", "Measure-theoretic ergodic theory"),
           ("E", "Miscellaneous topics in measure theory")],
    "30": [("A", "General properties of functions of one complex variable"),
           ("B", "Series expansions of functions of one complex variable"),
           ("C", "Geometric function theory"),
           ("D", "Entire and meromorphic functions of one complex variable"),
           ("E", "Miscellaneous topics of analysis in the complex plane"),
           ("F", "Riemann surfaces"),
           ("G", "Generalized function theory"),
           ("H", "Spaces and algebras of analytic functions of one complex variable"),
           ("J", "Function theory on the disc"),
           ("K", "Universal holomorphic functions of one complex variable"),
           ("L", "Analysis on metric spaces")],
    "31": [("A", "Two-dimensional potential theory"),
           ("B", "Higher-dimensional potential theory"),
           ("C", "Generalizations of potential theory"),
           ("D", "Axiomatic potential theory"),
           ("E", "Potential theory on fractals and metric spaces")],
    "32": [("A", "Holomorphic functions of several complex variables"),
           ("B", "Local analytic geometry"),
           ("C", "Analytic spaces"),
           ("D", "Analytic continuation"),
           ("E", "Holomorphic convexity"),
           ("F", "Geometric convexity in several complex variables"),
           ("G", "Deformations of analytic structures"),
           ("H", "Holomorphic mappings and correspondences"),
           ("J", "Compact analytic spaces"),
           ("K", "Generalizations of analytic spaces"),
           ("L", "Holomorphic fiber spaces"),
           ("M", "Complex spaces with a group of automorphisms"),
           ("N", "Automorphic functions in several complex variables"),
           ("P", "Non-Archimedean analysis"),
           ("Q", "Complex manifolds"),
           ("S", "Complex singularities"),
           ("T", "Pseudoconvex domains"),
           ("U", "Pluripotential theory"),
           ("V", "CR manifolds"),
           ("W", "Differential operators in several variables")],
    "33": [("B", "Elementary classical functions"),
           ("C", "Hypergeometric functions"),
           ("D", "Basic hypergeometric functions"),
           ("E", "Other special functions"),
           ("F", "Computational aspects of special functions")],
    "34": [("A", "General theory for ordinary differential equations"),
           ("B", "Boundary value problems for ordinary differential equations"),
           ("C", "Qualitative theory for ordinary differential equations"),
           ("D", "Stability theory for ordinary differential equations"),
           ("E", "Asymptotic theory for ordinary differential equations"),
           ("F", "Ordinary differential equations and systems with randomness"),
           ("G", "Differential equations in abstract spaces"),
           ("H", "Control problems involving ordinary differential equations"),
           ("K", "Functional-differential equations"),
           ("L", "Ordinary differential operators"),
           ("M", "Ordinary differential equations in the complex domain"),
           ("N", "Dynamic equations on time scales or measure chains")],
    "35": [("A", "General topics in partial differential equations"),
           ("B", "Qualitative properties of solutions to partial differential equations"),
           ("C", "Representations of solutions to partial differential equations"),
           ("D", "Generalized solutions to partial differential equations"),
           ("E", "Equations and systems with constant coefficients"),
           ("F", "General first-order partial differential equations and systems"),
           ("G", "General higher-order partial differential equations and systems"),
           ("H", "Close-to-elliptic equations and systems"),
           ("J", "Elliptic equations and elliptic systems"),
           ("K", "Parabolic equations and parabolic systems"),
           ("L", "Hyperbolic equations and hyperbolic systems"),
           ("M", "Partial differential equations of mixed type and mixed-type systems"),
           ("N", "Overdetermined systems of partial differential equations"),
           ("P", "Spectral theory and eigenvalue problems for partial differential equations"),
           ("Q", "Partial differential equations of mathematical physics and other areas of application"),
           ("R", "Miscellaneous topics in partial differential equations"),
           ("S", "Pseudodifferential operators and other generalizations of partial differential operators")],
    "37": [("A", "Ergodic theory"),
           ("B", "Topological dynamics"),
           ("C", "Smooth dynamical systems: general theory"),
           ("D", "Dynamical systems with hyperbolic behavior"),
           ("E", "Low-dimensional dynamical systems"),
           ("F", "Dynamical systems over complex numbers"),
           ("G", "Local and nonlocal bifurcation theory for dynamical systems"),
           ("H", "Random dynamical systems"),
           ("J", "Dynamical aspects of finite-dimensional Hamiltonian and Lagrangian systems"),
           ("K", "Dynamical system aspects of infinite-dimensional Hamiltonian systems"),
           ("L", "Infinite-dimensional dissipative dynamical systems"),
           ("M", "Approximation methods and numerical treatment of dynamical systems"),
           ("N", "Applications of dynamical systems"),
           ("P", "Arithmetic and non-Archimedean dynamical systems")],
    "39": [("A", "Difference equations"),
           ("B", "Functional equations and inequalities")],
    "40": [("A", "Convergence and divergence of infinite limiting processes"),
           ("B", "Multiple sequences and series"),
           ("C", "General summability methods"),
           ("D", "Direct theorems on summability"),
           ("E", "Inversion theorems"),
           ("F", "Absolute and strong summability"),
           ("G", "Special methods of summability"),
           ("H", "Functional analytic methods in summability"),
           ("J", "Summability in abstract structures")],
    "41": [("A", "Approximations and expansions")],
    "42": [("A", "Harmonic analysis in one variable"),
           ("B", "Harmonic analysis in several variables"),
           ("C", "Nontrigonometric harmonic analysis")],
    "43": [("A", "Abstract harmonic analysis")],
    "44": [("A", "Integral transforms, operational calculus")],
    "45": [("A", "Linear integral equations"),
           ("B", "Fredholm integral equations"),
           ("C", "Eigenvalue problems for integral equations"),
           ("D", "Volterra integral equations"),
           ("E", "Singular integral equations"),
           ("F", "Systems of linear integral equations"),
           ("G", "Nonlinear integral equations"),
           ("H", "Miscellaneous special kernels"),
           ("J", "Integro-ordinary differential equations"),
           ("K", "Integro-partial differential equations"),
           ("L", "Theoretical approximation of solutions to integral equations"),
           ("M", "Qualitative behavior of solutions to integral equations"),
           ("N", "Abstract integral equations, integral equations in abstract spaces"),
           ("P", "Integral operators"),
           ("Q", "Inverse problems for integral equations"),
           ("R", "Random integral equations")],
    "46": [("A", "Topological linear spaces and related structures"),
           ("B", "Normed linear spaces and Banach spaces; Banach lattices"),
           ("C", "Inner product spaces and their generalizations, Hilbert spaces"),
           ("E", "Linear function spaces and their duals"),
           ("F", "Distributions, generalized functions, distribution spaces"),
           ("G", "Measures, integration, derivative, holomorphy (all involving infinite-dimensional spaces)"),
           ("H", "Topological algebras, normed rings and algebras, Banach algebras"),
           ("J", "Commutative Banach algebras and commutative topological algebras"),
           ("K", "Topological (rings and) algebras with an involution"),
           ("L", "Selfadjoint operator algebras"),
           ("M", "Methods of category theory in functional analysis"),
           ("N", "Miscellaneous applications of functional analysis"),
           ("S", "Other (nonclassical) types of functional analysis"),
           ("T", "Nonlinear functional analysis")],
    "47": [("A", "General theory of linear operators"),
           ("B", "Special classes of linear operators"),
           ("C", "Individual linear operators as elements of algebraic systems"),
           ("D", "Groups and semigroups of linear operators, their generalizations and applications"),
           ("E", "Ordinary differential operators"),
           ("F", "Partial differential operators"),
           ("G", "Integral, integro-differential, and pseudodifferential operators"),
           ("H", "Nonlinear operators and their properties"),
           ("J", "Equations and inequalities involving nonlinear operators"),
           ("L", "Linear spaces and algebras of operators"),
           ("N", "Miscellaneous applications of operator theory"),
           ("S", "Other (nonclassical) types of operator theory")],
    "49": [("J", "Existence theories in calculus of variations and optimal control"),
           ("K", "Optimality conditions"),
           ("L", "Hamilton-Jacobi theories"),
           ("M", "Numerical methods in optimal control"),
           ("N", "Miscellaneous topics in calculus of variations and optimal control"),
           ("Q", "Manifolds and measure-geometric topics"),
           ("R", "Variational methods for eigenvalues of operators"),
           ("S", "Variational principles of physics")],
    "51": [("A", "Linear incidence geometry"),
           ("B", "Nonlinear incidence geometry"),
           ("C", "Ring geometry (Hjelmslev, Barbilian, etc.)"),
           ("D", "Geometric closure systems"),
           ("E", "Finite geometry and special incidence structures"),
           ("F", "Metric geometry"),
           ("G", "Ordered geometries (ordered incidence structures, etc.)"),
           ("H", "Topological geometry"),
           ("J", "Incidence groups"),
           ("K", "Distance geometry"),
           ("L", "Geometric order structures"),
           ("M", "Real and complex geometry"),
           ("N", "Analytic and descriptive geometry"),
           ("P", "Geometry and physics")],
    "52": [("A", "General convexity"),
           ("B", "Polytopes and polyhedra"),
           ("C", "Discrete geometry")],
    "53": [("A", "Classical differential geometry"),
           ("B", "Local differential geometry"),
           ("C", "Global differential geometry"),
           ("D", "Symplectic geometry, contact geometry"),
           ("E", "Geometric evolution equations"),
           ("Z", "Applications of differential geometry to sciences and engineering")],
    "54": [("A", "Generalities in general topology"),
           ("B", "Basic constructions in general topology"),
           ("C", "Maps and general types of topological spaces"),
           ("D", "Fairly general properties of topological spaces"),
           ("E", "Topological spaces with richer structures"),
           ("F", "Special properties of topological spaces"),
           ("G", "Peculiar topological spaces"),
           ("H", "Connections of general topology with other structures, applications"),
           ("J", "Nonstandard topology")],
    "55": [("M", "Classical topics in algebraic topology"),
           ("N", "Homology and cohomology theories in algebraic topology"),
           ("P", "Homotopy theory"),
           ("Q", "Homotopy groups"),
           ("R", "Fiber spaces and bundles in algebraic topology"),
           ("S", "Operations and obstructions in algebraic topology"),
           ("T", "Spectral sequences in algebraic topology"),
           ("U", "Applied homotopy theory")],
    "57": [("K", "Low-dimensional topology in specific dimensions"),
           ("M", "General low-dimensional topology"),
           ("N", "Topological manifolds"),
           ("P", "Generalized manifolds"),
           ("Q", "PL-topology"),
           ("R", "Differential topology"),
           ("S", "Topological transformation groups"),
           ("T", "Homology and homotopy of topological groups and related structures"),
           ("Z", "Relations of manifold theory with science and engineering")],
    "58": [("A", "General theory of differentiable manifolds"),
           ("B", "Infinite-dimensional manifolds"),
           ("C", "Calculus on manifolds; nonlinear operators"),
           ("D", "Spaces and manifolds of mappings"),
           ("E", "Variational problems in infinite-dimensional spaces"),
           ("H", "Pseudogroups, differentiable groupoids and general structures on manifolds"),
           ("J", "Partial differential equations on manifolds; differential operators"),
           ("K", "Theory of singularities and catastrophe theory"),
           ("Z", "Applications of global analysis to the sciences")],
    "60": [("A", "Foundations of probability theory"),
           ("B", "Probability theory on algebraic and topological structures"),
           ("C", "Combinatorial probability"),
           ("D", "Geometric probability and stochastic geometry"),
           ("E", "Distribution theory in probability"),
           ("F", "Limit theorems in probability theory"),
           ("G", "Stochastic processes"),
           ("H", "Stochastic analysis"),
           ("J", "Markov processes"),
           ("K", "Special processes"),
           ("L", "Rough analysis")],
    "62": [("A", "Foundational topics in statistics"),
           ("B", "Sufficiency and information"),
           ("C", "Statistical decision theory"),
           ("D", "Statistical sampling theory and related topics"),
           ("E", "Statistical distribution theory"),
           ("F", "Parametric inference"),
           ("G", "Nonparametric inference"),
           ("H", "Multivariate analysis"),
           ("J", "Linear inference, regression"),
           ("K", "Design of statistical experiments"),
           ("L", "Sequential statistical methods"),
           ("M", "Inference from stochastic processes"),
           ("N", "Survival analysis and censored data"),
           ("P", "Applications of statistics"),
           ("Q", "Statistical tables"),
           ("R", "Statistics of data science")],
    "65": [("A", "Tables in numerical analysis"),
           ("B", "Acceleration of convergence in numerical analysis"),
           ("C", "Probabilistic methods, stochastic differential equations"),
           ("D", "Numerical approximation and computational geometry"),
           ("E", "Numerical methods in complex analysis"),
           ("F", "Numerical linear algebra"),
           ("G", "Error analysis and interval analysis"),
           ("H", "Nonlinear algebraic or transcendental equations"),
           ("J", "Numerical analysis in abstract spaces"),
           ("K", "Numerical methods for mathematical programming, optimization and variational techniques"),
           ("L", "Numerical methods for ordinary differential equations"),
           ("M", "Numerical methods for partial differential equations, initial value and time-dependent initial-boundary value problems"),
           ("N", "Numerical methods for partial differential equations, boundary value problems"),
           ("P", "Numerical problems in dynamical systems"),
           ("Q", "Numerical methods for difference and functional equations"),
           ("R", "Numerical methods for integral equations, integral transforms"),
           ("S", "Graphical methods in numerical analysis"),
           ("T", "Numerical methods in Fourier analysis"),
           ("Y", "Computer aspects of numerical algorithms")],
    "68": [("M", "Computer system organization"),
           ("N", "Theory of software"),
           ("P", "Theory of data"),
           ("Q", "Theory of computing"),
           ("R", "Discrete mathematics in relation to computer science"),
           ("T", "Artificial intelligence"),
           ("U", "Computing methodologies and applications"),
           ("V", "Computer science support for mathematical research and practice"),
           ("W", "Algorithms in computer science")],
    "70": [("A", "Axiomatics, foundations of mechanics"),
           ("B", "Kinematics"),
           ("C", "Statics"),
           ("E", "Dynamics of a rigid body and of multibody systems"),
           ("F", "Dynamics of a system of particles, including celestial mechanics"),
           ("G", "General models, approaches, and methods in mechanics"),
           ("H", "Hamiltonian and Lagrangian mechanics"),
           ("J", "Linear vibration theory"),
           ("K", "Nonlinear dynamics in mechanics"),
           ("L", "Random vibrations in mechanics of particles and systems"),
           ("M", "Orbital mechanics"),
           ("P", "Variable mass, rockets"),
           ("Q", "Control of mechanical systems"),
           ("S", "Classical field theories in mechanics")],
    "74": [("A", "Generalities, axiomatics, foundations of continuum mechanics of solids"),
           ("B", "Elastic materials"),
           ("C", "Plastic materials, materials of stress-rate and internal-variable type"),
           ("D", "Materials with memory"),
           ("E", "Material properties given special treatment"),
           ("F", "Coupling of solid mechanics with other effects"),
           ("G", "Equilibrium (steady-state) problems in solid mechanics"),
           ("H", "Dynamical problems in solid mechanics"),
           ("J", "Waves in solid mechanics"),
           ("K", "Thin bodies, structures"),
           ("L", "Special subfields of solid mechanics"),
           ("M", "Special kinds of problems in solid mechanics"),
           ("N", "Phase transformations in solids"),
           ("P", "Optimization problems in solid mechanics"),
           ("Q", "Homogenization, determination of effective properties in solid mechanics"),
           ("R", "Fracture and damage"),
           ("S", "Numerical and other methods in solid mechanics")],
    "76": [("A", "Foundations, constitutive equations, rheology, hydrodynamical models of non-fluid phenomena"),
           ("B", "Incompressible inviscid fluids"),
           ("D", "Incompressible viscous fluids"),
           ("E", "Hydrodynamic stability"),
           ("F", "Turbulence"),
           ("G", "General aerodynamics and subsonic flows"),
           ("H", "Transonic flows"),
           ("J", "Supersonic flows"),
           ("K", "Hypersonic flows"),
           ("L", "Shock waves and blast waves in fluid mechanics"),
           ("M", "Basic methods in fluid mechanics"),
           ("N", "Compressible fluids and gas dynamics"),
           ("P", "Rarefied gas flows, Boltzmann equation in fluid mechanics"),
           ("Q", "Hydro- and aero-acoustics"),
           ("R", "Diffusion and convection"),
           ("S", "Flows in porous media; filtration; seepage"),
           ("T", "Multiphase and multicomponent flows"),
           ("U", "Waves in rotating fluids"),
           ("V", "Reaction effects in flows"),
           ("W", "Magnetohydrodynamics and electrohydrodynamics"),
           ("X", "Ionized gas flow in electromagnetic fields; plasmic flow"),
           ("Y", "Quantum hydrodynamics and relativistic hydrodynamics"),
           ("Z", "Biological fluid mechanics")],
    "78": [("A", "General topics in optics and electromagnetic theory"),
           ("M", "Basic methods for problems in optics and electromagnetic theory")],
    "80": [("A", "Thermodynamics and heat transfer"),
           ("M", "Basic methods in thermodynamics and heat transfer")],
    "81": [("P", "Foundations, quantum information and its processing, quantum axioms, and philosophy"),
           ("Q", "General mathematical topics and methods in quantum theory"),
           ("R", "Groups and algebras in quantum theory"),
           ("S", "General quantum mechanics and problems of quantization"),
           ("T", "Quantum field theory; related classical field theories"),
           ("U", "Quantum computing"),
           ("V", "Applications of quantum theory to specific physical systems")],
    "82": [("B", "Equilibrium statistical mechanics"),
           ("C", "Time-dependent statistical mechanics (dynamic and nonequilibrium)"),
           ("D", "Applications of statistical mechanics to specific types of physical systems"),
           ("M", "Basic methods in statistical mechanics")],
    "83": [("A", "Special relativity"),
           ("B", "Observational and experimental questions in relativity"),
           ("C", "General relativity"),
           ("D", "Relativistic gravitational theories other than Einstein's"),
           ("E", "Unified, higher-dimensional and super field theories"),
           ("F", "Cosmology")],
    "85": [("A", "Astronomy and astrophysics")],
    "86": [("A", "Geophysics")],
    "90": [("B", "Operations research and management science"),
           ("C", "Mathematical programming")],
    "91": [("A", "Game theory"),
           ("B", "Mathematical economics"),
           ("C", "Social and behavioral sciences: general topics"),
           ("D", "Mathematical sociology (including anthropology)"),
           ("E", "Mathematical psychology"),
           ("F", "Other social and behavioral sciences (mathematical treatment)"),
           ("G", "Actuarial science and mathematical finance")],
    "92": [("B", "Mathematical biology in general"),
           ("C", "Physiological, cellular and medical topics"),
           ("D", "Genetics and population dynamics"),
           ("E", "Chemistry"),
           ("F", "Other natural sciences (mathematical treatment)")],
    "93": [("A", "General systems theory"),
           ("B", "Controllability, observability, and system structure"),
           ("C", "Model systems in control theory"),
           ("D", "Stability of control systems"),
           ("E", "Stochastic systems and control")],
    "94": [("A", "Communication, information"),
           ("B", "Theory of error-correcting codes and error-detecting codes"),
           ("C", "Circuits, networks"),
           ("D", "Fuzzy sets and logic in connection with information theory")],
    "97": [("A", "General, mathematics and education"),
           ("B", "Educational policy and systems"),
           ("C", "Psychology of mathematics education, research in mathematics education"),
           ("D", "Education and instruction in mathematics"),
           ("E", "Foundations of mathematics education"),
           ("F", "Arithmetic, number systems (educational aspects)"),
           ("G", "Geometry education"),
           ("H", "Algebra education"),
           ("I", "Analysis education"),
           ("K", "Combinatorics, graph theory, probability theory, statistics (educational aspects)"),
           ("M", "Mathematical modeling, applications of mathematics (educational aspects)"),
           ("N", "Numerical mathematics (educational aspects)"),
           ("P", "Computer science (educational aspects)"),
           ("Q", "Computer science education"),
           ("R", "Computer science applications in education"),
           ("U", "Educational material and media, educational technology in mathematics education")],
}

# Third-level codes with their authentic meanings; everything the study
# fixture or its discussion touches must be here.
CURATED_THIRD: list[tuple[str, str]] = [
    ("00A05", "Mathematics in general"),
    ("01A55", "History of mathematics in the 19th century"),
    ("01A60", "History of mathematics in the 20th century"),
    ("03C13", "Model theory of finite structures"),
    ("03C45", "Classification theory, stability, and related concepts in model theory"),
    ("03C98", "Applications of model theory"),
    ("05C15", "Coloring of graphs and hypergraphs"),
    ("05C20", "Directed graphs (digraphs), tournaments"),
    ("05C75", "Structural characterization of families of graphs"),
    ("05C85", "Graph algorithms (graph-theoretic aspects)"),
    ("06A07", "Combinatorics of partially ordered sets"),
    ("11F27", "Theta series; Weil representation; theta correspondences"),
    ("11F70", "Representation-theoretic methods; automorphic representations over local and global fields"),
    ("11G25", "Varieties over finite and local fields"),
    ("11T71", "Algebraic coding theory; cryptography (number-theoretic aspects)"),
    ("14G05", "Rational points"),
    ("14G50", "Applications to coding theory and cryptography of arithmetic geometry"),
    ("15A42", "Inequalities involving eigenvalues and eigenvectors"),
    ("15A60", "Norms of matrices, numerical range, applications of functional analysis to matrix theory"),
    ("15A90", "Applications of matrix theory to physics"),
    ("16H05", "Separable algebras (e.g., quaternion algebras, Azumaya algebras, etc.)"),
    ("16K20", "Finite-dimensional division rings"),
    ("16W10", "Rings with involution; Lie, Jordan and other nonassociative structures"),
    ("18D05", "Double categories, 2-categories, bicategories and generalizations"),
    ("18D35", "Internal categories and groupoids"),
    ("18D99", "None of the above, but in this section"),
    ("20D60", "Arithmetic and combinatorial problems involving abstract finite groups"),
    ("20F50", "Periodic groups; locally finite groups"),
    ("20G25", "Linear algebraic groups over local fields and their integers"),
    ("20P05", "Probabilistic methods in group theory"),
    ("22E50", "Representations of Lie and linear algebraic groups over local fields"),
    ("22E55", "Representations of Lie and linear algebraic groups over global fields and adele rings"),
    ("26A39", "Denjoy and Perron integrals, other special integrals"),
    ("26C10", "Real polynomials: location of zeros"),
    ("28A12", "Contents, measures, outer measures, capacities"),
    ("28B05", "Vector-valued set functions, measures and integrals"),
    ("30C15", "Zeros of polynomials, rational functions, and other analytic functions of one complex variable"),
    ("30E20", "Integration, integrals of Cauchy type, integral representations of analytic functions in the complex plane"),
    ("31C12", "Potential theory on Riemannian manifolds and other spaces"),
    ("32U05", "Plurisubharmonic functions and generalizations"),
    ("32U15", "General pluripotential theory"),
    ("32W20", "Complex Monge-Ampere operators"),
    ("33C05", "Classical hypergeometric functions, 2F1"),
    ("33C45", "Orthogonal polynomials and functions of hypergeometric type (Jacobi, Laguerre, Hermite, Askey scheme, etc.)"),
    ("34A05", "Explicit solutions, first integrals of ordinary differential equations"),
    ("34L10", "Eigenfunctions, eigenfunction expansions, completeness of eigenfunctions of ordinary differential operators"),
    ("35A08", "Fundamental solutions to PDEs"),
    ("35B32", "Bifurcations in context of PDEs"),
    ("35J05", "Laplace operator, Helmholtz equation (reduced wave equation), Poisson equation"),
    ("35Q53", "KdV equations (Korteweg-de Vries equations)"),
    ("35S05", "Pseudodifferential operators as generalizations of partial differential operators"),
    ("37E30", "Dynamical systems involving homeomorphisms and diffeomorphisms of planes and surfaces"),
    ("42A16", "Fourier coefficients, Fourier series of functions with special properties, special Fourier series"),
    ("42A38", "Fourier and Fourier-Stieltjes transforms and other transforms of Fourier type"),
    ("42B20", "Singular and oscillatory integrals (Calderon-Zygmund, etc.)"),
    ("42B25", "Maximal functions, Littlewood-Paley theory"),
    ("46E35", "Sobolev spaces and other spaces of smooth functions, embedding theorems, trace theorems"),
    ("46G20", "Infinite-dimensional holomorphy"),
    ("47B15", "Hermitian and normal operators (spectral measures, functional calculus, etc.)"),
    ("47B37", "Linear operators on special spaces (weighted shifts, operators on sequence spaces, etc.)"),
    ("47B47", "Commutators, derivations, elementary operators, etc."),
    ("47B80", "Random linear operators"),
    ("47H40", "Random nonlinear operators"),
    ("49K15", "Optimality conditions for problems involving ordinary differential equations"),
    ("49M25", "Discrete approximations in optimal control"),
    ("53C05", "Connections (general theory)"),
    ("53C23", "Global geometric and topological methods; differential geometric analysis on metric spaces"),
    ("53D12", "Lagrangian submanifolds; Maslov index"),
    ("55R65", "Generalizations of fiber spaces and bundles in algebraic topology"),
    ("57K10", "Knot theory"),
    ("57R70", "Critical points and critical submanifolds in differential topology"),
    ("57S30", "Discontinuous groups of transformations"),
    ("58C35", "Integration on manifolds; measures on manifolds"),
    ("58D05", "Groups of diffeomorphisms and homeomorphisms as manifolds"),
    ("58J05", "Elliptic equations on manifolds, general theory"),
    ("58J10", "Differential complexes; elliptic complexes"),
    ("58J32", "Boundary value problems on manifolds"),
    ("58J40", "Pseudodifferential and Fourier integral operators on manifolds"),
    ("58J42", "Noncommutative global analysis, noncommutative residues"),
    ("58J50", "Spectral problems; spectral geometry; scattering theory on manifolds"),
    ("58J52", "Determinants and determinant bundles, analytic torsion"),
    ("60H25", "Random operators and equations (aspects of stochastic analysis)"),
    ("62F10", "Point estimation"),
    ("62H12", "Estimation in multivariate analysis"),
    ("62H30", "Classification and discrimination; cluster analysis (statistical aspects); mixture models"),
    ("62P20", "Applications of statistics to economics"),
    ("65K05", "Numerical mathematical programming methods"),
    ("65K10", "Numerical optimization and variational techniques"),
    ("65M12", "Stability and convergence of numerical methods for initial value and initial-boundary value problems involving PDEs"),
    ("65M55", "Multigrid methods; domain decomposition for initial value and initial-boundary value problems involving PDEs"),
    ("65M60", "Finite element, Rayleigh-Ritz and Galerkin methods for initial value and initial-boundary value problems involving PDEs"),
    ("65N99", "None of the above, but in this section"),
    ("68M10", "Network design and communication in computer systems"),
    ("68P25", "Data encryption (aspects in computer science)"),
    ("68Q42", "Grammars and rewriting systems"),
    ("68Q45", "Formal languages and automata"),
    ("68T01", "General topics in artificial intelligence"),
    ("68T05", "Learning and adaptive systems in artificial intelligence"),
    ("68T10", "Pattern recognition, speech recognition"),
    ("68T45", "Machine vision and scene understanding"),
    ("68T50", "Natural language processing"),
    ("68U10", "Computing methodologies for image processing"),
    ("68W10", "Parallel algorithms in computer science"),
    ("70G65", "Symmetries, Lie group and Lie algebra methods for problems in mechanics"),
    ("74B20", "Nonlinear elasticity"),
    ("76B15", "Water waves, gravity waves; dispersion and scattering, nonlinear interaction"),
    ("76M20", "Finite difference methods applied to problems in fluid mechanics"),
    ("78A35", "Motion of charged particles"),
    ("78A45", "Diffraction, scattering"),
    ("78A60", "Lasers, masers, optical bistability, nonlinear optics"),
    ("78M20", "Finite difference methods applied to problems in optics and electromagnetic theory"),
    ("81P94", "Quantum cryptography (quantum-theoretic aspects)"),
    ("81S99", "None of the above, but in this section"),
    ("82B44", "Disordered systems (random Ising models, random Schrodinger operators, etc.) in equilibrium statistical mechanics"),
    ("82C26", "Dynamic and nonequilibrium phase transitions (general) in statistical mechanics"),
    ("82D45", "Ferroelectrics (statistical mechanics)"),
    ("83C10", "Equations of motion in general relativity and gravitational theory"),
    ("85A04", "General questions in astronomy and astrophysics"),
    ("86A10", "Meteorology and atmospheric physics"),
    ("90B18", "Communication networks in operations research"),
    ("91A80", "Applications of game theory"),
    ("91C20", "Clustering in the social and behavioral sciences"),
    ("92B20", "Neural networks for/in biological studies, artificial life and related topics"),
    ("92C55", "Biomedical imaging and signal processing"),
    ("93B07", "Observability"),
    ("93B35", "Sensitivity (robustness) of control systems"),
    ("94A17", "Measures of information, entropy"),
    ("94A60", "Cryptography"),
    ("97A40", "Mathematics and society"),
    ("97A99", "None of the above, but in this section"),
    ("97U50", "Computer-assisted instruction, e-learning (mathematics education)"),
]

# Second-level codes that must survive trimming even without curated
# third-level children (they appear bare or in wildcard form in the
# study fixture or its discussion).
PROTECTED_AREAS = {
    "11D", "11N", "11P", "11S", "28C", "30F", "30G", "33B", "35L", "35R",
    "37H", "60G", "62F", "70F", "74F", "83C", "90C",
}

SPECIAL_SUBS: list[tuple[str, str]] = [
    ("00", "General reference works (handbooks, dictionaries, bibliographies, etc.)"),
    ("01", "Introductory exposition (textbooks, tutorial papers, etc.)"),
    ("02", "Research exposition (monographs, survey articles)"),
    ("03", "History of the subject"),
    ("04", "Software, source code, etc."),
    ("06", "Proceedings, conferences, collections, etc."),
    ("08", "Computational methods for problems in this section"),
    ("11", "Research data for problems in this section"),
]

DASH_AREA_DESC = (
    "Special kinds of materials: reference works, expository works, "
    "software, proceedings, research data"
)


def build_entries() -> dict[str, str]:
    entries: dict[str, str] = {}
    for top, name in TOPS:
        entries[top] = name

    curated_by_area: dict[str, list[tuple[str, str]]] = {}
    for code, desc in CURATED_THIRD:
        curated_by_area.setdefault(code[:3], []).append((code, desc))

    protected = set(PROTECTED_AREAS) | set(curated_by_area)

    # Trim letter areas to the global second-level budget (the special
    # "-" area of each class takes the other 63 slots).
    areas = {top: list(pairs) for top, pairs in AREAS.items()}
    budget = TARGET_SECOND - len(TOPS)
    total = sum(len(v) for v in areas.values())
    if total < budget:
        raise SystemExit(f"curated areas ({total}) below budget ({budget}); extend AREAS")
    while total > budget:
        top = max(areas, key=lambda t: (len(areas[t]), t))
        dropped = False
        for i in range(len(areas[top]) - 1, -1, -1):
            letter = areas[top][i][0]
            if top + letter not in protected:
                del areas[top][i]
                total -= 1
                dropped = True
                break
        if not dropped:
            raise SystemExit(f"cannot trim class {top}: all areas protected")

    for top, pairs in areas.items():
        entries[top + "-"] = DASH_AREA_DESC
        for letter, name in pairs:
            entries[top + letter] = name

    for top, _name in TOPS:
        for sub, desc in SPECIAL_SUBS:
            entries[f"{top}-{sub}"] = desc

    used: dict[str, set[str]] = {}
    for code, desc in CURATED_THIRD:
        area = code[:3]
        if area not in entries:
            raise SystemExit(f"curated code {code} has no area entry {area}")
        entries[code] = desc
        used.setdefault(area, set()).add(code[3:])

    # Fill remaining third-level slots evenly across letter areas.
    letter_areas = sorted(top + letter for top in areas for letter, _ in areas[top])
    need = TARGET_THIRD - len(TOPS) * len(SPECIAL_SUBS) - len(CURATED_THIRD)
    base, rem = divmod(need, len(letter_areas))
    fill_seq = [f"{i:02d}" for i in range(5, 100, 5)] + ["99"] + [
        f"{i:02d}" for i in range(1, 100) if i % 5
    ]
    for i, area in enumerate(letter_areas):
        quota = base + (1 if i < rem else 0)
        taken = used.get(area, set())
        area_name = entries[area]
        added = 0
        for sub in fill_seq:
            if added >= quota:
                break
            code = area + sub
            if sub in taken or code in BLOCKED:
                continue
            if sub == "99":
                entries[code] = "None of the above, but in this section"
            else:
                entries[code] = f"{area_name}: subdivision {sub}"
            taken.add(sub)
            added += 1
        if added < quota:
            raise SystemExit(f"area {area} exhausted before quota")

    return entries


def main() -> None:
    entries = build_entries()
    counts = [0, 0, 0]
    for code in entries:
        counts[0 if len(code) == 2 else 1 if len(code) == 3 else 2] += 1
    assert tuple(counts) == (TARGET_TOP, TARGET_SECOND, TARGET_THIRD), counts
    for blocked in BLOCKED:
        assert blocked not in entries, blocked

    lines = [
        "# MSC 2020 three-level code list (reconstructed; see README for provenance).",
        "# One record per line: code<TAB>description. Lines starting with # are ignored.",
    ]
    lines += [f"{code}\t{desc}" for code, desc in sorted(entries.items())]
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {OUT} ({counts[0]} / {counts[1]} / {counts[2]})")


if __name__ == "__main__":
    main()
