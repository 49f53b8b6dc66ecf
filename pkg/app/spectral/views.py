"""
Views for the spectral API.
"""
import logging

from django.http import Http404
from drf_spectacular.utils import (
    OpenApiParameter,
    OpenApiTypes,
    extend_schema,
)
from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import APIView

from core.config import NORMALIZE_LOG_MEAN_ZERO, NORMALIZE_NONE
from core.exceptions import SpectralError
from spectral import serializers
from spectral.output import table_payload
from spectral.tables import (
    DEFAULT_PROBES,
    baxter_table,
    born_table,
    factorization_payload,
    gi_table,
    prepare_symbol,
    theorem1_table,
    verblunsky_table,
)

logger = logging.getLogger(__name__)

REPORTS = {
    'baxter': lambda w, config, data: baxter_table(w, config),
    'born': lambda w, config, data: born_table(w, config, data.get('pole')),
    'gi': lambda w, config, data: gi_table(w, config),
    'theorem1': lambda w, config, data: theorem1_table(
        w, config, data.get('probes') or DEFAULT_PROBES),
}


def error_response(exc):
    logger.info('%s: %s', exc.name, exc)
    return Response(
        {'error': exc.name, 'detail': str(exc)},
        status=status.HTTP_400_BAD_REQUEST,
    )


class FactorizeView(APIView):
    """Wiener-Hopf factors of a symbol."""

    @extend_schema(
        request=serializers.SpectralRequestSerializer,
        responses={200: serializers.FactorizationSerializer,
                   400: serializers.ErrorSerializer},
    )
    def post(self, request):
        serializer = serializers.SpectralRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        try:
            phi, config = prepare_symbol(serializer.validated_data['symbol'],
                                         serializer.validated_data['config'])
            payload = factorization_payload(phi, config)
        except SpectralError as exc:
            return error_response(exc)
        return Response(serializers.FactorizationSerializer(payload).data)


class VerblunskyView(APIView):
    """Verblunsky coefficients by moments, by the fixed point, or both."""

    @extend_schema(
        request=serializers.VerblunskyRequestSerializer,
        responses={200: serializers.TableSerializer,
                   400: serializers.ErrorSerializer},
    )
    def post(self, request):
        serializer = serializers.VerblunskyRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        try:
            w, config = prepare_symbol(data['symbol'], data['config'],
                                       NORMALIZE_LOG_MEAN_ZERO)
            table = verblunsky_table(w, config, data['method'])
        except SpectralError as exc:
            return error_response(exc)
        return Response(table_payload(table))


class ReportView(APIView):
    """Baxter, Born, GI and finite-section reports as JSON tables."""

    @extend_schema(
        parameters=[
            OpenApiParameter(
                'which',
                OpenApiTypes.STR,
                OpenApiParameter.PATH,
                enum=sorted(REPORTS),
                description='Report to run.',
            ),
        ],
        request=serializers.ReportRequestSerializer,
        responses={200: serializers.TableSerializer,
                   400: serializers.ErrorSerializer},
    )
    def post(self, request, which):
        if which not in REPORTS:
            raise Http404(f'Unknown report: {which}')
        serializer = serializers.ReportRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        default = NORMALIZE_LOG_MEAN_ZERO
        if which == 'theorem1':
            default = NORMALIZE_NONE
        try:
            w, config = prepare_symbol(data['symbol'], data['config'], default)
            table = REPORTS[which](w, config, data)
        except SpectralError as exc:
            return error_response(exc)
        return Response(table_payload(table))
