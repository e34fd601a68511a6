import io
from fractions import Fraction

from rest_framework import serializers
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from engine.exceptions import StatementSyntaxError
from engine.model import format_rational
from engine.statements import RelationCode, sort_codes

from .catalog import Problem


class RationalField(serializers.Field):
    """Exact rational carried as "p/q" text; floats never appear on the wire."""

    default_error_messages = {
        'invalid': 'Expected an exact rational such as "1/100", got {value!r}.',
    }

    def to_representation(self, value):
        return format_rational(Fraction(value))

    def to_internal_value(self, data):
        if not isinstance(data, str):
            self.fail('invalid', value=data)
        try:
            return Fraction(data)
        except (ValueError, ZeroDivisionError):
            self.fail('invalid', value=data)


class RelationCodeField(serializers.CharField):
    def to_representation(self, value):
        return RelationCode.parse(str(value)).value

    def to_internal_value(self, data):
        try:
            return RelationCode.parse(super().to_internal_value(data))
        except StatementSyntaxError as exc:
            raise serializers.ValidationError(exc.reason)


class CodeSetField(serializers.ListField):
    child = RelationCodeField()

    def to_representation(self, data):
        return [code.value for code in sort_codes(RelationCode.parse(str(c)) for c in data)]

    def to_internal_value(self, data):
        return frozenset(super().to_internal_value(data))


class CellSerializer(serializers.Serializer):
    figure = serializers.IntegerField(min_value=1, max_value=4)
    major = RelationCodeField()
    minor = RelationCodeField()
    classical = CodeSetField()
    complementary = CodeSetField()
    feasible = serializers.BooleanField()
    alpha = serializers.ListField(child=RationalField(), max_length=4)
    beta = serializers.ListField(child=RationalField(), max_length=4)

    def validate(self, attrs):
        expected = 4 if attrs['feasible'] else 0
        for name in ('alpha', 'beta'):
            if len(attrs[name]) != expected:
                raise serializers.ValidationError({name: f"expected {expected} bounds"})
        if not attrs['feasible'] and (attrs['classical'] or attrs['complementary']):
            raise serializers.ValidationError('an infeasible cell carries no deductions')
        return attrs


class DeductionSerializer(serializers.Serializer):
    premises = serializers.ListField(child=serializers.CharField())
    query = serializers.CharField()
    feasible = serializers.BooleanField()
    classical = CodeSetField()
    complementary = CodeSetField()
    alpha = serializers.ListField(child=RationalField(), max_length=4)
    beta = serializers.ListField(child=RationalField(), max_length=4)


def cell_payload(problem: Problem, result) -> dict:
    bounds = result.bounds
    return {
        'figure': problem.figure,
        'major': problem.major,
        'minor': problem.minor,
        'classical': result.classical,
        'complementary': result.complementary,
        'feasible': result.feasible,
        'alpha': list(bounds.alpha) if bounds else [],
        'beta': list(bounds.beta) if bounds else [],
    }


def render_data(data) -> str:
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8') + '\n'


def render_cells(payloads) -> str:
    return render_data(CellSerializer(list(payloads), many=True).data)


def parse_cells(text: str) -> list:
    """Validated cells from a json rendering; raises serializers.ValidationError."""
    data = JSONParser().parse(io.BytesIO(text.encode('utf-8')))
    serializer = CellSerializer(data=data, many=True)
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data
