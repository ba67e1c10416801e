# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Test the exact information measures."""

import numpy as np
import pytest

from relaycap.dmrates import DmChannelSpec, InnerDistribution
from relaycap.errors import InvalidArgumentError
from relaycap.probcore import JointPmf, VariableId, assemble_joint, \
    binary_convolve, binary_entropy, conditional_entropy, \
    conditional_mutual_information, entropy, marginal, mutual_information


def _random_pmf(seed, shape=(2, 3, 2)):
    rng = np.random.default_rng(seed)
    probs = rng.random(shape)
    variables = tuple(
        VariableId(name, size) for name, size in zip("ABC", shape)
    )
    return JointPmf(variables, probs / probs.sum())


def test_variable_id_validation():
    """Names must be non-empty, cardinalities positive integers."""
    with pytest.raises(InvalidArgumentError):
        VariableId("", 2)
    with pytest.raises(InvalidArgumentError):
        VariableId("X", 0)
    with pytest.raises(InvalidArgumentError):
        VariableId("X", 1.5)


@pytest.mark.parametrize("probs, field", [
    ([[0.5, 0.5], [0.5, 0.5]], "probs"),
    ([[0.5, -0.1], [0.3, 0.3]], "probs"),
    ([0.5, 0.5], "probs"),
])
def test_joint_pmf_rejects_bad_tensors(probs, field):
    """Mass, sign and shape are checked."""
    variables = (VariableId("A", 2), VariableId("B", 2))
    with pytest.raises(InvalidArgumentError) as error:
        JointPmf(variables, np.array(probs))
    assert error.value.field == field


def test_joint_pmf_rejects_duplicate_names():
    """Two axes cannot share a name."""
    with pytest.raises(InvalidArgumentError):
        JointPmf((VariableId("A", 2), VariableId("A", 2)),
                 np.full((2, 2), 0.25))


def test_joint_pmf_is_frozen():
    """The tensor is copied and read-only."""
    probs = np.full((2, 2), 0.25)
    pmf = JointPmf((VariableId("A", 2), VariableId("B", 2)), probs)
    probs[0, 0] = 1.0
    assert pmf.probs[0, 0] == 0.25
    with pytest.raises(ValueError):
        pmf.probs[0, 0] = 0.0


def test_entropy_of_uniform_pmf():
    """A uniform pmf over 4 outcomes carries 2 bits."""
    pmf = JointPmf((VariableId("A", 2), VariableId("B", 2)),
                   np.full((2, 2), 0.25))
    assert entropy(pmf, {"A", "B"}) == pytest.approx(2.0)
    assert entropy(pmf, "A") == pytest.approx(1.0)
    assert mutual_information(pmf, "A", "B") == 0.0


def test_zero_probabilities_are_ignored():
    """0 log 0 = 0."""
    pmf = JointPmf((VariableId("A", 3),), np.array([0.5, 0.5, 0.0]))
    assert entropy(pmf, "A") == pytest.approx(1.0)


def test_identical_variables_share_all_information():
    """I(A; B) = H(A) when B copies A."""
    pmf = JointPmf((VariableId("A", 2), VariableId("B", 2)),
                   np.array([[0.3, 0.0], [0.0, 0.7]]))
    assert mutual_information(pmf, "A", "B") == pytest.approx(
        binary_entropy(0.3))


@pytest.mark.parametrize("seed", range(5))
def test_chain_rules(seed):
    """Entropy and information chain rules hold to 1e-9."""
    pmf = _random_pmf(seed)
    h_abc = entropy(pmf, {"A", "B", "C"})
    chained = (entropy(pmf, "A") + conditional_entropy(pmf, "B", "A")
               + conditional_entropy(pmf, "C", {"A", "B"}))
    assert abs(h_abc - chained) < 1e-9

    joint = conditional_mutual_information(pmf, "A", {"B", "C"})
    split = (mutual_information(pmf, "A", "C")
             + conditional_mutual_information(pmf, "A", "B", "C"))
    assert abs(joint - split) < 1e-9


@pytest.mark.parametrize("seed", range(5))
def test_information_is_nonnegative(seed):
    """Every conditional mutual information is >= 0."""
    pmf = _random_pmf(seed, (3, 2, 2))
    assert conditional_mutual_information(pmf, "A", "B", "C") >= 0.0
    assert conditional_mutual_information(pmf, "B", "C", "A") >= 0.0
    assert conditional_entropy(pmf, "A", {"B", "C"}) >= 0.0


def test_information_needs_disjoint_sets():
    """Overlapping variable sets are rejected."""
    pmf = _random_pmf(0)
    with pytest.raises(InvalidArgumentError):
        conditional_mutual_information(pmf, {"A", "B"}, "B")
    with pytest.raises(InvalidArgumentError):
        conditional_mutual_information(pmf, "A", "B", "A")


def test_unknown_variable():
    """Names absent from the pmf are rejected."""
    with pytest.raises(InvalidArgumentError):
        entropy(_random_pmf(0), "Z")


def test_marginal_keeps_axis_order():
    """Marginals sum out the other axes."""
    pmf = _random_pmf(1)
    ac = marginal(pmf, {"C", "A"})
    assert ac.names == ("A", "C")
    assert np.allclose(ac.probs, pmf.probs.sum(axis=1))


@pytest.mark.parametrize("p, expected", [
    (0.0, 0.0),
    (1.0, 0.0),
    (0.5, 1.0),
    (0.1, 0.468996),
    (0.304, 0.886126),
])
def test_binary_entropy(p, expected):
    """Reference values of H_b."""
    assert binary_entropy(p) == pytest.approx(expected, abs=1e-6)


def test_binary_entropy_rejects_out_of_range():
    """H_b is defined on [0, 1] only."""
    with pytest.raises(InvalidArgumentError):
        binary_entropy(1.5)
    with pytest.raises(InvalidArgumentError):
        binary_entropy(float("nan"))


def test_binary_convolve():
    """Bern(0.15) xor Bern(0.1) is Bern(0.22)."""
    assert binary_convolve(0.15, 0.1) == pytest.approx(0.22)
    assert binary_convolve(0.5, 0.3) == pytest.approx(0.5)


def test_assemble_joint_degenerate_factorization(example1):
    """With |U| = |V| = 1 the input marginal is p(s)p(x)p(x_r)p(y|...)."""
    p_x, p_xr = np.array([0.85, 0.15]), np.array([0.7, 0.3])
    inner = InnerDistribution.degenerate(p_x, p_xr, example1.card_s)
    pmf = assemble_joint(example1, inner)
    assert pmf.names == ("U", "V", "S", "X", "XR", "Y")
    expected = np.einsum("s,x,r,sxry->sxry", example1.state_pmf, p_x, p_xr,
                         example1.kernel)
    assert np.allclose(
        marginal(pmf, {"S", "X", "XR", "Y"}).probs, expected, atol=1e-15
    )


def test_assemble_joint_rejects_mismatched_shapes(example1):
    """Factor shapes must match the channel alphabets."""
    inner = InnerDistribution.degenerate(
        np.array([0.2, 0.3, 0.5]), np.array([0.5, 0.5]), example1.card_s
    )
    with pytest.raises(InvalidArgumentError) as error:
        assemble_joint(example1, inner)
    assert error.value.field == "p_x_given_u"


@pytest.mark.parametrize("seed", range(100))
def test_assemble_joint_keeps_channel_and_structure(seed):
    """State marginal, channel conditional and X - U - X_R are preserved."""
    rng = np.random.default_rng(seed)

    def rows(*shape):
        return rng.dirichlet(np.ones(shape[-1]), size=shape[:-1])

    spec = DmChannelSpec(rng.dirichlet(np.ones(3)), rows(3, 2, 3, 2))
    inner = InnerDistribution(rng.dirichlet(np.ones(2)), rows(2, 2),
                              rows(2, 3), rows(3, 3, 2, 3))
    pmf = assemble_joint(spec, inner)
    assert pmf.probs.sum() == pytest.approx(1.0)
    assert np.allclose(marginal(pmf, {"S"}).probs, spec.state_pmf)
    sxry = marginal(pmf, {"S", "X", "XR", "Y"}).probs
    assert np.allclose(sxry / sxry.sum(axis=-1, keepdims=True), spec.kernel)
    assert conditional_mutual_information(
        pmf, {"X"}, {"XR"}, {"U"}) == pytest.approx(0.0, abs=1e-12)
