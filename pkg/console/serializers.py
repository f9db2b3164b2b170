from rest_framework import serializers
from rest_framework.renderers import JSONRenderer


class CommandResultSerializer(serializers.Serializer):
    command = serializers.CharField()
    inputs = serializers.DictField(child=serializers.CharField())
    result = serializers.JSONField()
    witnesses = serializers.ListField(child=serializers.JSONField())


def render_document(result) -> str:
    data = CommandResultSerializer(result).data
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')
