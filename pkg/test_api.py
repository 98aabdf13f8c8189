"""
REST API 전체 테스트

🎯 테스트 시나리오:
1. 헬스 체크
2. 공간 계산 (정규화, 요약, 정준형, 컴팩트화)
3. 임베딩 / 위상동형 판정
4. 순서수 연산
5. 안정 타입 목록 / 분해 / 포셋
6. 오류 응답 (400 / 422)

💡 사용 방법:
    pytest test_api.py -v

⚠️ 주의:
- 서버를 따로 띄울 필요 없이 TestClient 로 앱을 직접 호출합니다
"""
import pytest
from fastapi.testclient import TestClient

from src.main import app

API_V1 = "/api/v1"


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


# ============================================================
# 헬스 체크
# ============================================================


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "healthy"
    assert set(body["budget"]) == {"slope", "width", "depth", "node_limit"}


def test_root(client):
    assert client.get("/").json()["service"] == "Dimensional Type Service"


# ============================================================
# 공간
# ============================================================


def test_normalize(client):
    response = client.post(f"{API_V1}/spaces/normalize", json={"expr": "lim({1*G(1)};{1*G(1)})"})
    assert response.status_code == 200
    assert response.json() == {"input": "lim({1*G(1)};{1*G(1)})", "result": "G(G(1))"}


def test_derivative(client):
    response = client.post(f"{API_V1}/spaces/derivative", json={"expr": "I(G(1))"})
    assert response.json()["result"] == "I(1)"


def test_info(client):
    body = client.post(f"{API_V1}/spaces/info", json={"expr": "I(1)"}).json()
    assert body == {
        "normal_form": "I(1)",
        "rank": 2,
        "compact": False,
        "derivative": "1",
        "points": "w",
        "layer_signature": [False],
        "upper": "w^2+1",
    }


def test_canonical(client):
    body = client.post(f"{API_V1}/spaces/canonical", json={"expr": "G(G(1))"}).json()
    assert body == {"alpha": 2, "n": 1, "ordinal": "w^2+1"}


def test_compactify(client):
    body = client.post(f"{API_V1}/spaces/compactify", json={"expr": "I(1)"}).json()
    assert body["result"] == "G(G(1))"


def test_embed_yes(client):
    response = client.post(f"{API_V1}/spaces/embed", json={"a": "G(1)", "b": "I(1)"})
    assert response.status_code == 200
    body = response.json()
    assert body["answer"] == "yes"
    assert body["witness"]["source"] == "G(1)"
    assert body["obstruction"] is None


def test_embed_no_with_budget(client):
    payload = {"a": "I(1)", "b": "G(1)", "budget": {"slope": 2, "width": 2}}
    body = client.post(f"{API_V1}/spaces/embed", json=payload).json()
    assert body["answer"] == "no"
    assert body["obstruction"]["kind"] == "compact-local"
    assert body["budget"]["slope"] == 2


def test_same_type(client):
    body = client.post(f"{API_V1}/spaces/same-type", json={"a": "G(1)", "b": "I(1)"}).json()
    assert body["answer"] == "no"


def test_homeomorphic(client):
    body = client.post(f"{API_V1}/spaces/homeomorphic", json={"a": "G(1)", "b": "I(1)"}).json()
    assert body["answer"] == "no"
    assert body["obstruction"]["kind"] == "compact-local"


# ============================================================
# 순서수
# ============================================================


@pytest.mark.parametrize(
    "operation,payload,expected",
    [
        ("add", {"a": "w^2*2+w", "b": "w^2"}, "w^2*3"),
        ("mul", {"a": "w+1", "b": "w"}, "w^2"),
        ("compare", {"a": "w", "b": "w+1"}, "less"),
        ("rank", {"a": "w^3"}, "3"),
        ("rank", {"a": "0"}, "0"),
        ("e-bound", {"a": "1"}, "w^2+1"),
    ],
)
def test_ordinal_operations(client, operation, payload, expected):
    response = client.post(f"{API_V1}/ordinals/{operation}", json=payload)
    assert response.status_code == 200
    assert response.json() == {"operation": operation, "result": expected}


def test_binary_ordinal_operation_needs_b(client):
    response = client.post(f"{API_V1}/ordinals/add", json={"a": "w"})
    assert response.status_code == 422


def test_unknown_ordinal_operation(client):
    response = client.post(f"{API_V1}/ordinals/divide", json={"a": "w", "b": "2"})
    assert response.status_code == 422


# ============================================================
# 안정 타입
# ============================================================


def test_stable_level(client):
    body = client.get(f"{API_V1}/stable/1").json()
    assert body["count"] == 2
    assert [item["expr"] for item in body["classes"]] == ["G(1)", "I(1)"]


def test_stable_decompose(client):
    body = client.post(f"{API_V1}/stable/decompose", json={"expr": "sum{w*G(1),1*I(1)}"}).json()
    assert body == [
        {"id": "L1.0", "expr": "G(1)", "mult": "w"},
        {"id": "L1.1", "expr": "I(1)", "mult": "1"},
    ]


def test_stable_poset(client):
    body = client.get(f"{API_V1}/stable/poset/1").json()
    assert body["edges"] == [[0, 1], [1, 2]]


# ============================================================
# 오류 응답
# ============================================================


def test_syntax_error_is_400(client):
    response = client.post(f"{API_V1}/spaces/normalize", json={"expr": "sum{0*1}"})
    assert response.status_code == 400
    body = response.json()
    assert body["error"] == "ExprSyntaxError"
    assert body["position"] == 4


def test_deep_nesting_is_400(client):
    expr = "I(" * 5000 + "1" + ")" * 5000
    response = client.post(f"{API_V1}/spaces/normalize", json={"expr": expr})
    assert response.status_code == 400
    assert response.json()["error"] == "ExprSyntaxError"


def test_domain_error_is_422(client):
    response = client.post(f"{API_V1}/spaces/canonical", json={"expr": "I(1)"})
    assert response.status_code == 422
    assert response.json()["error"] == "NonCompactError"


def test_stable_level_out_of_range(client):
    response = client.get(f"{API_V1}/stable/99")
    assert response.status_code == 422
    assert response.json()["error"] == "DomainError"
