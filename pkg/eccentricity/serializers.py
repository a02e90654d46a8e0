from rest_framework import serializers

from .exceptions import MespError
from .formats import parse_edge_list_document, parse_highlight, parse_path_spec
from .generators import FAMILIES


class GraphDocumentSerializer(serializers.Serializer):
    document = serializers.CharField(trim_whitespace=False)

    def validate(self, data):
        try:
            graph, labels = parse_edge_list_document(data["document"])
        except MespError as exc:
            raise serializers.ValidationError({"document": str(exc)})
        data["graph"] = graph
        data["labels"] = labels
        return data


class OracleRequestSerializer(GraphDocumentSerializer):
    max_n = serializers.IntegerField(min_value=1, required=False, default=None)
    path_cap = serializers.IntegerField(min_value=1, required=False, default=None)


class EccRequestSerializer(GraphDocumentSerializer):
    path = serializers.CharField()

    def validate(self, data):
        data = super().validate(data)
        try:
            data["vertices"] = parse_path_spec(data["path"], data["labels"])
        except MespError as exc:
            raise serializers.ValidationError({"path": str(exc)})
        return data


class RootedRequestSerializer(GraphDocumentSerializer):
    root = serializers.IntegerField(min_value=0, required=False, default=0)

    def validate(self, data):
        data = super().validate(data)
        if data["root"] >= data["graph"].n:
            raise serializers.ValidationError({"root": f"vertex {data['root']} is outside 0..{data['graph'].n - 1}"})
        return data


class SpreadRequestSerializer(RootedRequestSerializer):
    adversarial = serializers.BooleanField(required=False, default=False)
    cap = serializers.IntegerField(min_value=1, required=False, default=None)


class DotRequestSerializer(GraphDocumentSerializer):
    highlights = serializers.ListField(child=serializers.CharField(), required=False, default=list)

    def validate(self, data):
        data = super().validate(data)
        try:
            data["paths"] = [parse_highlight(spec, data["labels"]) for spec in data["highlights"]]
        except MespError as exc:
            raise serializers.ValidationError({"highlights": str(exc)})
        return data


class GeneratorQuerySerializer(serializers.Serializer):
    family = serializers.ChoiceField(choices=FAMILIES)
    k = serializers.IntegerField(min_value=1, required=False, default=1)
    n = serializers.IntegerField(min_value=1, required=False, default=10)
    p = serializers.FloatField(min_value=0.0, max_value=1.0, required=False, default=0.3)
    seed = serializers.IntegerField(min_value=0, required=False, default=0)
