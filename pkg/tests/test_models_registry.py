"""Tests for model spec parsing, the model registry and named models."""

import pytest

from src.core.base_audit import BaseAudit
from src.core.errors import ModelSpecError, NotARootError, NotOmittedError
from src.core.models import named_model, resolve, resolve_text, spec_alpha
from src.core.registry import AuditRegistry, ModelRegistry, ModelSpec, parse_int_list, parse_model_spec
from src.core.root_system import LieType, Root


class TestParseModelSpec:
    def test_named_with_alpha(self):
        spec = parse_model_spec("Grassmannian:2,4@-1,-1,0")
        assert spec.name == "grassmannian"
        assert spec.parameters == (2, 4)
        assert spec.alpha == (-1, -1, 0)
        assert spec.is_named

    def test_type_form(self):
        spec = parse_model_spec("D4/4,1,4")
        assert spec.lie_type == LieType.parse("D4")
        assert spec.crossed == (1, 4)
        assert not spec.is_named
        assert spec.format() == "D4/1,4"

    @pytest.mark.parametrize("text", [
        "projective:3",
        "flag:1,2,1",
        "A3/2",
        "B2/1,2@-1,-1",
    ])
    def test_format_round_trips(self, text):
        assert parse_model_spec(text).format() == text
        assert parse_model_spec(str(parse_model_spec(text))) == parse_model_spec(text)

    @pytest.mark.parametrize("text,token", [
        ("grassmannian:2,x", "x"),
        ("A3/one", "one"),
        ("projective:3@1,,0", ""),
    ])
    def test_bad_tokens_are_named(self, text, token):
        with pytest.raises(ModelSpecError, match=f"'{token}' in '{text}'"):
            parse_model_spec(text)

    @pytest.mark.parametrize("text", ["", "   ", "gr-2:2,4", "projective:3@", "Q9/1"])
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            parse_model_spec(text)

    def test_parse_int_list(self):
        assert parse_int_list(" 1, -2 ,3", "index") == (1, -2, 3)
        assert parse_int_list("", "index") == ()


class TestRegistry:
    def test_models_are_registered(self):
        for name in ("projective", "quadric", "grassmannian", "flag", "spinor", "lagrangian"):
            assert ModelRegistry.is_registered(name)
        assert ModelRegistry.get_factory("PROJECTIVE") is ModelRegistry.get_factory("projective")

    def test_audits_are_registered(self):
        audits = AuditRegistry.list_audits()
        for name in ("flag", "grassmannian", "spinor", "lagrangian", "projective", "quadric", "conformal"):
            assert name in audits
        assert AuditRegistry.get_audit_class("grassmannian") is AuditRegistry.get_audit_class("flag")

    def test_instantiating_keeps_registrations(self):
        ModelRegistry()
        AuditRegistry()
        assert "projective" in ModelRegistry.list_models()
        assert "flag" in AuditRegistry.list_audits()
        assert named_model("projective", (2,)).dim_gp == 2

    def test_audit_registry_rejects_non_audits(self):
        with pytest.raises(TypeError):
            AuditRegistry.register("bogus", object)
        assert not issubclass(object, BaseAudit)


class TestNamedModels:
    @pytest.mark.parametrize("name,params,lie_type,crossed", [
        ("projective", (3,), "A3", (1,)),
        ("quadric", (3,), "B2", (1,)),
        ("quadric", (4,), "D3", (1,)),
        ("quadric", (7,), "B4", (1,)),
        ("grassmannian", (2, 5), "A4", (2,)),
        ("flag", (1, 2, 1), "A3", (1, 3)),
        ("spinor", (4,), "D4", (4,)),
        ("lagrangian", (3,), "C3", (3,)),
    ])
    def test_realizations(self, name, params, lie_type, crossed):
        parabolic = named_model(name, params)
        assert str(parabolic.lie_type) == lie_type
        assert parabolic.crossed == crossed

    def test_grassmannian_of_lines_is_projective(self):
        parabolic = named_model("grassmannian", (1, 4))
        assert parabolic.label == "projective:3"
        assert parabolic.crossed == (1,)

    @pytest.mark.parametrize("name,params", [
        ("projective", (0,)),
        ("quadric", (2,)),
        ("grassmannian", (4, 4)),
        ("grassmannian", (0, 3)),
        ("spinor", (2,)),
        ("lagrangian", (1,)),
        ("flag", (3,)),
        ("flag", (2, 0)),
        ("projective", (2, 3)),
        ("grassmannian", (2,)),
        ("torus", (2,)),
    ])
    def test_invalid_models(self, name, params):
        with pytest.raises(ModelSpecError):
            named_model(name, params)

    def test_resolve(self):
        assert resolve_text("A3/2").describe() == "A3/{2}"
        assert resolve(parse_model_spec("lagrangian:2")).label == "lagrangian:2"

    def test_spec_alpha(self):
        spec = parse_model_spec("grassmannian:2,4@-1,-1,0")
        parabolic = resolve(spec)
        assert spec_alpha(parabolic, spec) == Root.of(-1, -1, 0)
        assert spec_alpha(parabolic, ModelSpec(name="grassmannian", parameters=(2, 4))) is None

    def test_spec_alpha_must_be_omitted_root(self):
        parabolic = resolve_text("A3/2")
        with pytest.raises(NotOmittedError):
            spec_alpha(parabolic, parse_model_spec("A3/2@-1,0,0"))
        with pytest.raises(NotARootError):
            spec_alpha(parabolic, parse_model_spec("A3/2@-1,0,-1"))
        with pytest.raises(NotARootError):
            spec_alpha(parabolic, parse_model_spec("A3/2@-1,-1"))
