"""Thin client for the compute service.

By default the client mounts the ASGI app in-process (no socket, no network),
which is how the CLI runs; pass ``base_url`` to talk to a remote server
started with ``tfdcx serve`` instead. Requests run through httpx's async
transport, driven by a private event loop per call — the CLI issues exactly
one request per command.
"""

from __future__ import annotations

import asyncio

import httpx

from .service import schemas


class ServiceError(Exception):
    """Non-2xx response from the service, carrying the typed payload."""

    def __init__(self, status_code: int, kind: str, detail: str, params: dict | None):
        super().__init__(f"{kind}: {detail}")
        self.status_code = status_code
        self.kind = kind
        self.detail = detail
        self.params = params


class ServiceClient:
    def __init__(self, base_url: str | None = None, timeout: float = 120.0):
        self._base_url = base_url
        self._timeout = timeout
        self._app = None
        if base_url is None:
            from .service.app import create_app

            self._app = create_app()

    def close(self) -> None:
        pass

    def __enter__(self) -> "ServiceClient":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    async def _request_async(self, method: str, path: str, payload: dict | None) -> httpx.Response:
        if self._app is not None:
            transport = httpx.ASGITransport(app=self._app)
            client = httpx.AsyncClient(
                transport=transport, base_url="http://tfdcx.internal", timeout=self._timeout
            )
        else:
            client = httpx.AsyncClient(base_url=self._base_url, timeout=self._timeout)
        async with client:
            if method == "GET":
                return await client.get(path)
            return await client.post(path, json=payload)

    def _request(self, method: str, path: str, payload: dict | None = None) -> dict:
        response = asyncio.run(self._request_async(method, path, payload))
        if response.status_code != 200:
            body = response.json()
            if isinstance(body, dict) and "error" in body:
                raise ServiceError(
                    response.status_code,
                    body["error"],
                    body.get("detail", ""),
                    body.get("params"),
                )
            detail = body.get("detail") if isinstance(body, dict) else body
            # FastAPI validation errors arrive as {"detail": [...]}
            raise ServiceError(response.status_code, "RequestValidation", str(detail), None)
        return response.json()

    def health(self) -> dict:
        return self._request("GET", "/health")

    def curve(self, request: schemas.CurveRequest) -> schemas.CurveResponse:
        return schemas.CurveResponse.model_validate(
            self._request("POST", "/curve", request.model_dump())
        )

    def sweep(self, request: schemas.SweepRequest) -> schemas.SweepResponse:
        return schemas.SweepResponse.model_validate(
            self._request("POST", "/sweep", request.model_dump())
        )

    def figure(self, request: schemas.FigureRequest) -> schemas.FigureResponse:
        return schemas.FigureResponse.model_validate(
            self._request("POST", "/figure", request.model_dump())
        )

    def selftest(self) -> schemas.SelfTestResponse:
        return schemas.SelfTestResponse.model_validate(
            self._request("POST", "/selftest", {})
        )
