from rest_framework import serializers


class ViolationSerializer(serializers.Serializer):
    kind = serializers.CharField()
    message = serializers.CharField()
    witnesses = serializers.DictField(child=serializers.CharField())


class CheckReportSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField(read_only=True)
    checked = serializers.IntegerField()
    parameters = serializers.DictField(child=serializers.CharField())
    violations = ViolationSerializer(many=True)
