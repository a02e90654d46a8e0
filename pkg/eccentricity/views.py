import logging

from rest_framework import generics, permissions, status, viewsets
from rest_framework.decorators import action
from rest_framework.response import Response

from .exceptions import CapExceededError, GraphValidationError, InstanceTooLargeError, PreconditionError
from .formats import serialize_edge_list, write_dot
from .generators import instance_by_name
from .reports import (
    approx3k_report,
    ecc_report,
    exact_report,
    laminarity_report,
    spread_report,
    verify_report,
)
from .serializers import (
    DotRequestSerializer,
    EccRequestSerializer,
    GeneratorQuerySerializer,
    OracleRequestSerializer,
    RootedRequestSerializer,
    SpreadRequestSerializer,
)

logger = logging.getLogger(__name__)


class GraphAnalysisViewSet(viewsets.ViewSet):
    """
    Stateless analyses of a posted edge-list document. Every action answers with
    the same report the matching management command prints.
    """
    permission_classes = [permissions.AllowAny]

    def _analyse(self, request, serializer_class, build):
        serializer = serializer_class(data=request.data)
        serializer.is_valid(raise_exception=True)
        try:
            return Response(build(serializer.validated_data))
        except (GraphValidationError, PreconditionError) as exc:
            return Response({'error': str(exc)}, status=status.HTTP_400_BAD_REQUEST)
        except (CapExceededError, InstanceTooLargeError) as exc:
            logger.warning(f"analysis refused: {exc}")
            return Response({'error': str(exc)}, status=status.HTTP_422_UNPROCESSABLE_ENTITY)
        except Exception:
            logger.exception("Unexpected error during graph analysis.")
            return Response({'error': 'internal error'}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)

    @action(detail=False, methods=['post'])
    def ecc(self, request):
        return self._analyse(
            request, EccRequestSerializer,
            lambda data: ecc_report(data['graph'], data['vertices']).as_dict(),
        )

    @action(detail=False, methods=['post'])
    def spread(self, request):
        return self._analyse(
            request, SpreadRequestSerializer,
            lambda data: spread_report(data['graph'], data['root'], data['adversarial'], data['cap']).as_dict(),
        )

    @action(detail=False, methods=['post'])
    def approx3k(self, request):
        return self._analyse(
            request, RootedRequestSerializer,
            lambda data: approx3k_report(data['graph'], data['root']).as_dict(),
        )

    @action(detail=False, methods=['post'])
    def exact(self, request):
        return self._analyse(
            request, OracleRequestSerializer,
            lambda data: exact_report(data['graph'], data['max_n'], data['path_cap']).as_dict(),
        )

    @action(detail=False, methods=['post'])
    def laminarity(self, request):
        return self._analyse(
            request, OracleRequestSerializer,
            lambda data: laminarity_report(data['graph'], data['max_n'], data['path_cap']).as_dict(),
        )

    @action(detail=False, methods=['post'])
    def verify(self, request):
        def build(data):
            report, passed = verify_report(
                data['graph'], data['max_n'], data['path_cap'], labelled=bool(data['labels'])
            )
            return {**report.as_dict(), 'passed': passed}

        return self._analyse(request, OracleRequestSerializer, build)

    @action(detail=False, methods=['post'])
    def dot(self, request):
        return self._analyse(
            request, DotRequestSerializer,
            lambda data: {'dot': write_dot(data['graph'], data['paths'], data['labels'])},
        )


class GeneratorView(generics.GenericAPIView):
    permission_classes = [permissions.AllowAny]
    serializer_class = GeneratorQuerySerializer

    def get(self, request, family, *args, **kwargs):
        serializer = self.get_serializer(data={**request.query_params.dict(), 'family': family})
        serializer.is_valid(raise_exception=True)
        params = serializer.validated_data
        try:
            instance = instance_by_name(
                params['family'], k=params['k'], n=params['n'], p=params['p'], seed=params['seed']
            )
        except PreconditionError as exc:
            return Response({'error': str(exc)}, status=status.HTTP_400_BAD_REQUEST)

        return Response({
            'family': params['family'],
            'name': instance.name,
            'document': serialize_edge_list(instance.graph, instance.labels, comments=[instance.name]),
            'labels': instance.labels,
            'paths': {name: list(path) for name, path in instance.paths.items()},
            'claims': [[quantity, expected] for quantity, expected in instance.claims],
        })
